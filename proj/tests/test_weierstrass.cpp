#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>

#include "rankcert/weierstrass.hpp"

using namespace rankcert;

namespace {

HyperellipticCurve curve_of(std::initializer_list<long> coeffs) {
  std::vector<BigRat> c;
  for (long v : coeffs) c.emplace_back(v);
  return build_curve(RatPoly(std::move(c)));
}

// Good primes for both the model and chi, tried in increasing order.
std::vector<std::uint64_t> good_primes(const HyperellipticCurve& curve, const IntPoly& chi, int count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p < 500 && static_cast<int>(out.size()) < count; p = next_prime(p + 1)) {
    try {
      degree_pattern(curve.model, p);
      degree_pattern(chi, p);
      out.push_back(p);
    } catch (const BadPrime&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("build_curve classifies models") {
  auto c = curve_of({1, 1, 0, 0, 0, 0, 1});
  CHECK(c.genus == 2);
  CHECK(c.parity == ModelParity::Even);
  CHECK(c.lc_is_square);

  auto d = curve_of({1, -1, 0, 0, 0, 1});
  CHECK(d.genus == 2);
  CHECK(d.parity == ModelParity::Odd);

  // (x-1)^2 (x+2) = x^3 - 3x + 2
  CHECK_THROWS_WITH_AS(curve_of({2, -3, 0, 1}), "singular model", CurveError);
  CHECK_THROWS_AS(curve_of({1, 0, 1}), CurveError);
  CHECK_FALSE(curve_of({1, 0, 0, 1}).warnings.empty());
  CHECK_FALSE(curve_of({1, 1, 0, 0, 0, 0, 2}).lc_is_square);
  CHECK_THROWS_AS(curve_of({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), CurveError);
}

TEST_CASE("nonzero 2-torsion class counts") {
  CHECK(enumerate_j2_classes(curve_of({1, 1, 0, 0, 0, 0, 1})).size() == 15);
  CHECK(enumerate_j2_classes(curve_of({1, -1, 0, 0, 0, 1})).size() == 15);
  CHECK(enumerate_j2_classes(curve_of({1, 1, 0, 0, 0, 0, 0, 0, 1})).size() == 63);
  CHECK(enumerate_j2_classes(curve_of({1, 1, 0, 0, 0, 0, 0, 1})).size() == 63);
}

TEST_CASE("sextic classes are the 2-subsets") {
  const auto classes = enumerate_j2_classes(curve_of({1, 1, 0, 0, 0, 0, 1}));
  std::vector<std::uint32_t> pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) pairs.push_back((1u << i) | (1u << j));
  // Each pair or its complement is the stored representative, exactly once.
  for (auto m : pairs) {
    const auto comp = 63u & ~m;
    const auto hits = std::count_if(classes.begin(), classes.end(),
                                    [&](const SubsetClass& c) { return c.mask == m || c.mask == comp; });
    CHECK(hits == 1);
  }
}

TEST_CASE("Frobenius oracle on explicit permutations") {
  auto sextic = curve_of({1, 1, 0, 0, 0, 0, 1});
  std::vector<std::uint32_t> masks;
  for (const auto& c : enumerate_j2_classes(sextic)) masks.push_back(c.mask);
  auto canon = [&](std::uint32_t m) { return canonical_j2(m, sextic).mask; };

  // A 6-cycle moves pairs at cyclic distance 1, 2 and 3.
  CHECK(induced_cycle_type(masks, permutation_with_cycle_type({6}), canon) == std::vector<int>{3, 6, 6});
  CHECK(induced_cycle_type(masks, permutation_with_cycle_type({1, 1, 1, 1, 1, 1}), canon) ==
        std::vector<int>(15, 1));
  // A transposition fixes {a,b} and the 6 pairs avoiding it, swaps the other 8.
  CHECK(induced_cycle_type(masks, permutation_with_cycle_type({1, 1, 1, 1, 2}), canon) ==
        std::vector<int>{1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2});
}

TEST_CASE("resolvent of x^6 + x + 1") {
  auto curve = curve_of({1, 1, 0, 0, 0, 0, 1});
  auto r = resolvent_j2(curve);
  CHECK(r.chi.degree() == 15);
  CHECK(r.chi.leading() == 1);
  CHECK(is_squarefree_exact(to_rat(r.chi)));
  CHECK(orbit_decomposition(r) == std::vector<int>{15});
  const auto primes = good_primes(curve, r.chi, 20);
  REQUIRE(primes.size() == 20);
  for (auto p : primes) CHECK(degree_pattern(r.chi, p).degrees == frobenius_orbit_oracle(curve, p));
}

TEST_CASE("resolvent of x(x-1)(x^4+x+2) has the rational class") {
  // x^6 - x^5 + x^3 + x^2 - 2x
  auto curve = curve_of({0, -2, 1, 1, 0, -1, 1});
  auto r = resolvent_j2(curve);
  CHECK(r.chi.degree() == 15);
  auto fac = factor_over_q(r.chi);
  REQUIRE(fac.has_linear_factor());
  CHECK(orbit_decomposition(r).front() == 1);

  // Locate the roots 0 and 1 independently and compare with the witness class.
  const auto iso = isolate_roots(curve.model);
  std::uint32_t rational = 0;
  for (std::size_t i = 0; i < iso.balls.size(); ++i) {
    if (snap_to_integer(iso.balls[i]) && (*snap_to_integer(iso.balls[i]) == 0 || *snap_to_integer(iso.balls[i]) == 1))
      rational |= 1u << i;
  }
  REQUIRE(std::popcount(rational) == 2);
  std::optional<std::size_t> idx;
  for (const auto& [poly, mult] : fac.factors)
    if (poly.degree() == 1) idx = label_index_of(r.labels, -poly.coeff(0));
  REQUIRE(idx);
  // Labels follow the isolation order used inside resolvent_j2, which starts
  // from the same deterministic points; compare as sets of roots.
  const auto w = r.classes[*idx].mask;
  CHECK((w == rational || w == (63u & ~rational)));
}

TEST_CASE("odd quintic resolvent") {
  auto curve = curve_of({1, -1, 0, 0, 0, 1});
  auto r = resolvent_j2(curve);
  CHECK(r.chi.degree() == 15);
  const auto orbits = orbit_decomposition(r);
  int sum = 0;
  for (int d : orbits) sum += d;
  CHECK(sum == 15);
  for (auto p : good_primes(curve, r.chi, 20))
    CHECK(degree_pattern(r.chi, p).degrees == frobenius_orbit_oracle(curve, p));
}

TEST_CASE("orbit decomposition does not depend on the labeling") {
  auto curve = curve_of({1, 1, 0, 0, 0, 0, 1});
  const auto classes = enumerate_j2_classes(curve);
  auto labels = [&](const std::vector<ComplexBall>& u, mpfr_prec_t p) {
    std::vector<ComplexBall> out;
    for (const auto& c : classes) {
      ComplexBall a = ComplexBall::exact(0, 0, p), b = ComplexBall::exact(0, 0, p);
      for (int i = 0; i < 6; ++i) {
        if (c.mask >> i & 1u) a = ball_add(a, u[i]);
        else b = ball_add(b, u[i]);
      }
      out.push_back(ball_mul(a, b));
    }
    return std::vector<std::vector<ComplexBall>>{out};
  };
  auto iso = isolate_roots(curve.model);
  const auto base = orbit_decomposition(resolvent_j2(curve));
  for (unsigned c : {1u, 2u, 5u}) {
    const auto chi = snap_resolvents(iso, Labeling{c}, labels)[0].chi;
    if (chi.coeff(0) == 0 || !is_squarefree(chi)) continue;
    CHECK(orbit_decomposition(chi) == base);
  }
}

TEST_CASE("genus 3 resolvent agrees with the oracle") {
  auto curve = curve_of({1, 1, 0, 0, 0, 0, 0, 0, 1});
  auto r = resolvent_j2(curve);
  CHECK(r.chi.degree() == 63);
  CHECK(is_squarefree(r.chi));
  for (auto p : good_primes(curve, r.chi, 5))
    CHECK(degree_pattern(r.chi, p).degrees == frobenius_orbit_oracle(curve, p));
}

TEST_CASE("describe_mask") {
  CHECK(describe_mask(0b101) == "{0,2}");
  CHECK(describe_mask(0b100000, 5) == "{inf}");
  CHECK(describe_mask(0) == "{}");
}

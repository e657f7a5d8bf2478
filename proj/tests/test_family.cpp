#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rankcert/factorq.hpp"
#include "rankcert/family.hpp"

using namespace rankcert;

namespace {

FamilyCurve fam_of(const char* text) { return family_from_bipoly(parse_bipoly(text)); }

bool in(const std::vector<BigRat>& v, const BigRat& a) { return std::find(v.begin(), v.end(), a) != v.end(); }

// Excluded by the sets exactly when direct evaluation finds a bad condition.
void check_against_evaluation(const FamilyCurve& fam, long lo, long hi) {
  const auto z = exclusion_sets(fam);
  for (long v = lo; v <= hi; ++v) {
    const BigRat a(v);
    CAPTURE(v);
    CHECK(why_excluded(fam, a).has_value() == (in(z.z1, a) || in(z.z2, a)));
  }
}

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

TEST_CASE("discriminant in t matches fiberwise discriminants") {
  for (const char* text : {"x^6 + t*x + 1", "(t-2)*x^6 + x + 1", "x^5 + t^2*x^2 - t", "x^3 + t*x + t^2 + 1"}) {
    const auto fam = fam_of(text);
    const RatPoly d = family_discriminant(fam);
    const auto cleared = cleared_coefficients(fam);
    for (long v = -6; v <= 6; ++v) {
      std::vector<BigRat> c;
      for (const auto& k : cleared) c.push_back(k(BigRat(v)));
      const RatPoly fv(std::move(c));
      if (fv.degree() != fam.degree_x()) continue;
      CAPTURE(text);
      CAPTURE(v);
      CHECK(d(BigRat(v)) == discriminant(fv));
    }
  }
}

TEST_CASE("exclusion sets for x^6 + t*x + 1") {
  const auto fam = fam_of("x^6 + t*x + 1");
  const auto z = exclusion_sets(fam);
  // disc is a constant multiple of 6^6 - 5^5 t^6, which has no rational root.
  CHECK(z.z1.empty());
  CHECK(z.z2.empty());
  check_against_evaluation(fam, -30, 30);
}

TEST_CASE("exclusion sets with rational bad fibers") {
  const auto fam = fam_of("(t-2)*x^6 + x + 1");
  const auto z = exclusion_sets(fam);
  // x^5 has coefficient 0, so the discriminant also vanishes where the degree drops.
  CHECK(in(z.z2, BigRat(2)));
  CHECK(in(z.z1, BigRat(2)));
  check_against_evaluation(fam, -30, 30);

  // x^3 - t^2 + 1 is singular exactly at t = 1 and t = -1.
  const auto cube = fam_of("x^3 - t^2 + 1");
  const auto zc = exclusion_sets(cube);
  CHECK(in(zc.z1, BigRat(1)));
  CHECK(in(zc.z1, BigRat(-1)));
  CHECK(zc.z1.size() == 2);
  check_against_evaluation(cube, -10, 10);
}

TEST_CASE("denominators enter the first set") {
  FamilyCurve fam;
  fam.coeffs.resize(7);
  fam.coeffs[0] = {RatPoly{BigRat(1)}, RatPoly{BigRat(-1), BigRat(1)}};
  fam.coeffs[1].num = RatPoly{BigRat(1)};
  fam.coeffs[6].num = RatPoly{BigRat(1)};
  const auto z = exclusion_sets(fam);
  CHECK(in(z.z1, BigRat(1)));
  CHECK(why_excluded(fam, BigRat(1)).value().find("denominator") != std::string::npos);
  CHECK_THROWS_AS(fam.fiber(BigRat(1)), FamilyError);
  check_against_evaluation(fam, -5, 5);
}

TEST_CASE("constant and degenerate families") {
  const auto z = exclusion_sets(fam_of("x^6 + x + 1"));
  CHECK(z.z1.empty());
  CHECK(z.z2.empty());
  CHECK_THROWS_AS(exclusion_sets(fam_of("(x^3 + t)^2")), FamilyError);
  CHECK_THROWS_AS(family_from_bipoly(parse_bipoly("t*x + 1")), FamilyError);
}

TEST_CASE("good fiber check") {
  const auto fam = fam_of("x^6 + t*x + 1");
  const auto g = check_good_fiber(fam, BigRat(1));
  CHECK(g.transitive);
  CHECK(g.report.j2 == std::vector<int>{15});

  // t = -2 has the rational root x = 1, so the classes {1, j} form a proper orbit.
  CHECK(fam.fiber(BigRat(-2))(BigRat(1)) == 0);
  const auto r = check_good_fiber(fam, BigRat(-2));
  CHECK_FALSE(r.transitive);
  CHECK(std::find(r.report.j2.begin(), r.report.j2.end(), 5) != r.report.j2.end());

  CHECK_THROWS_AS(check_good_fiber(fam_of("(t-2)*x^6 + x + 1"), BigRat(2)), FamilyError);
}

TEST_CASE("scan certificates are sound") {
  auto fam = fam_of("x^6 + t*x + 1");
  fam.good_fiber = BigRat(1);
  const auto report = scan(fam, -8, 8);
  REQUIRE(report.good_fiber);
  CHECK(report.good_fiber->transitive);
  CHECK(report.certified.size() + report.skipped.size() == 17);
  CHECK_FALSE(report.certified.empty());
  for (const auto& [a, cert] : report.certified) {
    CAPTURE(a.get_str());
    CHECK(cert.verdict == Verdict::RankAtLeastOne);
    CHECK(verify_certificate(cert).ok);
    CHECK_FALSE(why_excluded(fam, BigRat(a)).has_value());
    const auto curve = build_curve(*cert.curve);
    REQUIRE_FALSE(cert.resolvents.empty());
    const IntPoly& chi = cert.resolvents[0].chi;
    for (auto p : good_primes(curve, chi, 8)) CHECK(degree_pattern(chi, p).degrees == frobenius_orbit_oracle(curve, p));
  }
  // A rational root makes the 2-torsion action intransitive, so such fibers
  // cannot pass the irreducible-resolvent test used by the default scan.
  for (long v = -8; v <= 8; ++v)
    if (fam.fiber(BigRat(v))(BigRat(1)) == 0 || fam.fiber(BigRat(v))(BigRat(-1)) == 0)
      CHECK(std::none_of(report.certified.begin(), report.certified.end(),
                         [&](const auto& e) { return e.first == v; }));
}

TEST_CASE("scan skips excluded fibers") {
  const auto fam = fam_of("(t-2)*x^6 + x + 1");
  const auto report = scan(fam, 0, 4);
  const auto it = std::find_if(report.skipped.begin(), report.skipped.end(),
                               [](const Skipped& s) { return s.a == 2; });
  REQUIRE(it != report.skipped.end());
  CHECK(it->kind == SkipKind::InZ1);
  CHECK(it->details.find("leading") != std::string::npos);
}

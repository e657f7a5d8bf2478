#include "rankcert/weierstrass.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "rankcert/digest.hpp"

namespace rankcert {

namespace {

bool is_rational_square(const BigRat& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

std::uint32_t full_mask(int n) { return n >= 32 ? ~0u : (1u << n) - 1; }

// z + c z^2 + shift on every root ball.
std::vector<ComplexBall> labeling_values(const RootIsolation& roots, Labeling labeling) {
  std::vector<ComplexBall> u;
  const mpfr_prec_t p = roots.precision;
  const ComplexBall c = ComplexBall::exact(static_cast<long>(labeling.c), 0, p);
  const ComplexBall s = ComplexBall::exact(static_cast<long>(labeling.shift), 0, p);
  for (const auto& z : roots.balls) u.push_back(ball_add(ball_add(z, ball_mul(c, ball_mul(z, z))), s));
  return u;
}

std::optional<IntPoly> snap_poly(const std::vector<ComplexBall>& labels, mpfr_prec_t p) {
  const auto coeffs = ball_poly_from_roots(labels, p);
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    auto v = snap_to_integer(c);
    if (!v) return std::nullopt;
    out.push_back(std::move(*v));
  }
  return IntPoly(std::move(out));
}

}  // namespace

HyperellipticCurve build_curve(const RatPoly& f) {
  const int n = f.degree();
  if (n < 3) throw CurveError("curve model must have degree at least 3");
  if (!is_squarefree_exact(f)) throw CurveError("singular model");
  HyperellipticCurve c;
  c.f = f;
  c.genus = (n - 1) / 2;
  if (c.genus > kMaxGenus)
    throw CurveError("genus " + std::to_string(c.genus) + " exceeds the supported maximum of " +
                     std::to_string(kMaxGenus));
  c.parity = n % 2 == 1 ? ModelParity::Odd : ModelParity::Even;
  c.lc_is_square = is_rational_square(f.leading());
  auto im = make_integral_monic(f);
  c.model = std::move(im.poly);
  c.scale = std::move(im.scale);
  if (c.genus == 1) c.warnings.push_back("genus 1 model: rank certification is not possible in genus 1");
  return c;
}

SubsetClass canonical_j2(std::uint32_t mask, const HyperellipticCurve& curve) {
  const int n = curve.root_count();
  const std::uint32_t comp = full_mask(n) & ~mask;
  if (curve.parity == ModelParity::Odd) return {std::popcount(mask) % 2 == 0 ? mask : comp};
  return {std::min(mask, comp)};
}

std::string describe_mask(std::uint32_t mask, int infinity_bit) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!(mask >> i & 1u)) continue;
    if (!first) os << ',';
    first = false;
    if (i == infinity_bit) os << "inf";
    else os << i;
  }
  os << '}';
  return os.str();
}

std::vector<Labeling> labeling_schedule() {
  std::vector<Labeling> out;
  for (unsigned shift = 0; shift <= 1; ++shift)
    for (unsigned c = 0; c <= kMaxLabeling; ++c) out.push_back({c, shift});
  return out;
}

std::vector<SubsetClass> enumerate_j2_classes(const HyperellipticCurve& curve) {
  const int n = curve.root_count();
  std::vector<SubsetClass> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (std::popcount(m) % 2 != 0) continue;
    if (m == full_mask(n)) continue;
    if (canonical_j2(m, curve).mask == m) out.push_back({m});
  }
  return out;
}

std::vector<ExactResolvent> snap_resolvents(RootIsolation& roots, Labeling labeling, const LabelFn& labels) {
  for (;;) {
    const mpfr_prec_t p = roots.precision;
    const auto lists = labels(labeling_values(roots, labeling), p);
    std::vector<ExactResolvent> out;
    bool ok = true;
    for (const auto& list : lists) {
      auto chi = snap_poly(list, p);
      if (!chi) {
        ok = false;
        break;
      }
      out.push_back({std::move(*chi), list});
    }
    if (ok) return out;
    if (p * 2 > kMaxPrecision) throw PrecisionExhausted();
    roots = refine_isolation(roots, p * 2);
  }
}

TwoTorsionResolvent resolvent_j2(const HyperellipticCurve& curve) {
  const auto classes = enumerate_j2_classes(curve);
  const int n = curve.root_count();
  const bool even = curve.parity == ModelParity::Even;
  RootIsolation roots = isolate_roots(curve.model);
  auto label_fn = [&](const std::vector<ComplexBall>& u, mpfr_prec_t p) {
    std::vector<ComplexBall> labels;
    labels.reserve(classes.size());
    auto subset_sum = [&](std::uint32_t m) {
      ComplexBall acc = ComplexBall::exact(0, 0, p);
      for (int i = 0; i < n; ++i)
        if (m >> i & 1u) acc = ball_add(acc, u[i]);
      return acc;
    };
    for (const auto& cls : classes) {
      if (even) labels.push_back(ball_mul(subset_sum(cls.mask), subset_sum(full_mask(n) & ~cls.mask)));
      else labels.push_back(subset_sum(cls.mask));
    }
    return std::vector<std::vector<ComplexBall>>{std::move(labels)};
  };
  // A class label is linear in c on odd models and a product of two linear
  // factors on even ones. A zero label at c = 0, 1, 2 is treated as vanishing
  // for every c (e.g. a rational class whose roots have p1 = p2 = 0) and is
  // kept, provided chi is squarefree.
  bool always_zero = true;
  for (const Labeling lab : labeling_schedule()) {
    auto res = snap_resolvents(roots, lab, label_fn);
    IntPoly& chi = res[0].chi;
    const bool zero_label = chi.coeff(0) == 0;
    if (lab.shift == 0) always_zero = always_zero && zero_label;
    if (zero_label && !(lab.shift == 0 && always_zero && lab.c >= 2)) continue;
    if (!is_squarefree(chi)) continue;
    return {std::move(chi), lab, sha256_hex(canonical_encoding(curve.f)), classes, std::move(res[0].labels)};
  }
  throw AlgebraError("no injective labeling found");
}

std::vector<int> orbit_decomposition(const IntPoly& chi) { return factor_over_q(chi).degrees(); }

std::vector<int> orbit_decomposition(const TwoTorsionResolvent& r) { return orbit_decomposition(r.chi); }

std::optional<std::size_t> label_index_of(const std::vector<ComplexBall>& labels, const BigInt& r) {
  std::optional<std::size_t> found;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const ComplexBall point = ComplexBall::from_int(r, labels[k].precision());
    if (!contains(labels[k], point)) continue;
    if (found) return std::nullopt;
    found = k;
  }
  return found;
}

std::vector<int> permutation_with_cycle_type(const std::vector<int>& cycle_lengths) {
  std::vector<int> perm;
  int start = 0;
  for (int len : cycle_lengths) {
    for (int k = 0; k < len; ++k) perm.push_back(start + (k + 1) % len);
    start += len;
  }
  return perm;
}

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (mask >> i & 1u) out |= 1u << perm[i];
  return out;
}

std::vector<int> induced_cycle_type(const std::vector<std::uint32_t>& masks, const std::vector<int>& perm,
                                    const std::function<std::uint32_t(std::uint32_t)>& canonical) {
  std::vector<bool> seen(masks.size(), false);
  auto index_of = [&](std::uint32_t m) {
    auto it = std::lower_bound(masks.begin(), masks.end(), m);
    if (it == masks.end() || *it != m) throw AlgebraError("class set is not stable under the permutation");
    return static_cast<std::size_t>(it - masks.begin());
  };
  std::vector<int> out;
  for (std::size_t k = 0; k < masks.size(); ++k) {
    if (seen[k]) continue;
    int len = 0;
    std::size_t j = k;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = index_of(canonical(permute_mask(masks[j], perm)));
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> frobenius_orbit_oracle(const HyperellipticCurve& curve, std::uint64_t p) {
  const auto pattern = degree_pattern(curve.model, p);
  const auto perm = permutation_with_cycle_type(pattern.degrees);
  std::vector<std::uint32_t> masks;
  for (const auto& c : enumerate_j2_classes(curve)) masks.push_back(c.mask);
  return induced_cycle_type(masks, perm, [&](std::uint32_t m) { return canonical_j2(m, curve).mask; });
}

}  // namespace rankcert

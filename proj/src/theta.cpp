#include "rankcert/theta.hpp"

#include <bit>

#include "rankcert/digest.hpp"

namespace rankcert {

namespace {

int branch_bits(const HyperellipticCurve& curve) { return 2 * curve.genus + 2; }

std::uint32_t all_bits(int m) { return (1u << m) - 1; }

std::optional<ThetaClass> witness_for(const FactorizationQ& fac, const std::vector<ThetaClass>& classes,
                                      const std::vector<ComplexBall>& labels) {
  for (const auto& [poly, mult] : fac.factors) {
    if (poly.degree() != 1) continue;
    // Monic resolvent, so the primitive linear factor is x + a0.
    const BigInt root = -poly.coeff(0);
    if (auto k = label_index_of(labels, root)) return classes[*k];
  }
  return std::nullopt;
}

}  // namespace

int infinity_bit(const HyperellipticCurve& curve) {
  return curve.parity == ModelParity::Odd ? curve.root_count() : -1;
}

std::uint32_t canonical_theta(std::uint32_t mask, const HyperellipticCurve& curve) {
  const std::uint32_t comp = all_bits(branch_bits(curve)) & ~mask;
  return std::min(mask, comp);
}

ThetaClass make_theta_class(std::uint32_t mask, const HyperellipticCurve& curve) {
  const int m = branch_bits(curve);
  const std::uint32_t c = canonical_theta(mask, curve);
  const int size = std::popcount(c);
  const int small = std::min(size, m - size);
  const int h0 = (curve.genus + 1 - small) / 2;
  return {c, h0, h0 % 2 == 1};
}

std::string describe_theta(const ThetaClass& t, const HyperellipticCurve& curve) {
  const int m = branch_bits(curve);
  const std::uint32_t comp = all_bits(m) & ~t.mask;
  const std::uint32_t shown = std::popcount(comp) < std::popcount(t.mask) ? comp : t.mask;
  return describe_mask(shown, infinity_bit(curve));
}

std::vector<ThetaClass> enumerate_theta_classes(const HyperellipticCurve& curve) {
  const int m = branch_bits(curve);
  std::vector<ThetaClass> out;
  for (std::uint32_t t = 0; t <= all_bits(m); ++t) {
    if (std::popcount(t) % 2 != (curve.genus + 1) % 2) continue;
    if (canonical_theta(t, curve) != t) continue;
    out.push_back(make_theta_class(t, curve));
  }
  return out;
}

ThetaResolvents resolvent_theta(const HyperellipticCurve& curve) {
  ThetaResolvents r;
  for (const auto& t : enumerate_theta_classes(curve)) (t.odd ? r.odd_classes : r.even_classes).push_back(t);
  const int n = curve.root_count();
  const bool even = curve.parity == ModelParity::Even;
  const std::uint32_t roots_mask = all_bits(n);
  RootIsolation roots = isolate_roots(curve.model);
  auto label_fn = [&](const std::vector<ComplexBall>& u, mpfr_prec_t p) {
    auto subset_sum = [&](std::uint32_t m) {
      ComplexBall acc = ComplexBall::exact(0, 0, p);
      for (int i = 0; i < n; ++i)
        if (m >> i & 1u) acc = ball_add(acc, u[i]);
      return acc;
    };
    auto label = [&](const ThetaClass& t) {
      if (even) return ball_mul(subset_sum(t.mask), subset_sum(roots_mask & ~t.mask));
      return subset_sum(t.mask);
    };
    std::vector<std::vector<ComplexBall>> lists(2);
    for (const auto& t : r.odd_classes) lists[0].push_back(label(t));
    for (const auto& t : r.even_classes) lists[1].push_back(label(t));
    return lists;
  };
  // The class of the empty set (when present) always labels to 0, so zero
  // labels are not grounds for a retry here; squarefreeness alone decides.
  for (const Labeling lab : labeling_schedule()) {
    auto res = snap_resolvents(roots, lab, label_fn);
    if (!is_squarefree(res[0].chi) || !is_squarefree(res[1].chi)) continue;
    r.chi_odd = std::move(res[0].chi);
    r.chi_even = std::move(res[1].chi);
    r.odd_labels = std::move(res[0].labels);
    r.even_labels = std::move(res[1].labels);
    r.labeling = lab;
    r.curve_digest = sha256_hex(canonical_encoding(curve.f));
    return r;
  }
  throw AlgebraError("no injective labeling found");
}

RationalTheta rational_theta_from_resolvents(const ThetaResolvents& r) {
  RationalTheta out;
  const auto odd = factor_over_q(r.chi_odd);
  const auto even = factor_over_q(r.chi_even);
  out.found = odd.has_linear_factor() || even.has_linear_factor();
  if (!out.found) return out;
  out.witness = witness_for(odd, r.odd_classes, r.odd_labels);
  if (!out.witness) out.witness = witness_for(even, r.even_classes, r.even_labels);
  return out;
}

RationalTheta has_rational_theta(const HyperellipticCurve& curve) {
  if (curve.parity == ModelParity::Odd) {
    // T = {} when g+1 is even, else T = {inf}; its canonical mask is then all finite roots.
    const std::uint32_t t = (curve.genus + 1) % 2 == 0 ? 0u : (1u << infinity_bit(curve));
    return {true, make_theta_class(t, curve), true};
  }
  return rational_theta_from_resolvents(resolvent_theta(curve));
}

ThetaCycleTypes theta_frobenius_oracle(const HyperellipticCurve& curve, std::uint64_t p) {
  const auto pattern = degree_pattern(curve.model, p);
  auto cycles = pattern.degrees;
  // Infinity is a rational branch point: a fixed point of the permutation.
  if (curve.parity == ModelParity::Odd) cycles.push_back(1);
  const auto perm = permutation_with_cycle_type(cycles);
  std::vector<std::uint32_t> odd, even;
  for (const auto& t : enumerate_theta_classes(curve)) (t.odd ? odd : even).push_back(t.mask);
  auto canon = [&](std::uint32_t m) { return canonical_theta(m, curve); };
  return {induced_cycle_type(odd, perm, canon), induced_cycle_type(even, perm, canon)};
}

}  // namespace rankcert

#pragma once

// Theta characteristics of a hyperelliptic curve as subsets T of the 2g+2
// branch points with |T| = g+1 (mod 2), modulo complement. With T' the
// representative of size at most g+1, h0 = (g+1 - |T'|)/2 and the parity of
// the characteristic is the parity of h0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankcert/weierstrass.hpp"

namespace rankcert {

struct ThetaClass {
  std::uint32_t mask = 0;  ///< smaller bitmask of {T, T^c}; never contains infinity
  int h0 = 0;
  bool odd = false;

  friend bool operator==(const ThetaClass&, const ThetaClass&) = default;
};

/// Bit used for the point at infinity on odd models, -1 on even models.
int infinity_bit(const HyperellipticCurve& curve);
std::uint32_t canonical_theta(std::uint32_t mask, const HyperellipticCurve& curve);
ThetaClass make_theta_class(std::uint32_t mask, const HyperellipticCurve& curve);
/// The representative of size at most g+1, e.g. "{inf}" or "{0,2,4}".
std::string describe_theta(const ThetaClass& t, const HyperellipticCurve& curve);

/// All 2^(2g) classes ascending by mask.
std::vector<ThetaClass> enumerate_theta_classes(const HyperellipticCurve& curve);

struct ThetaResolvents {
  IntPoly chi_odd;
  IntPoly chi_even;
  Labeling labeling;
  std::string curve_digest;
  std::vector<ThetaClass> odd_classes;  ///< odd_classes[k] has label odd_labels[k]
  std::vector<ThetaClass> even_classes;
  std::vector<ComplexBall> odd_labels;
  std::vector<ComplexBall> even_labels;
};

/**
 * Both parity resolvents, squarefree, of degrees 2^(g-1)(2^g - 1) and
 * 2^(g-1)(2^g + 1). On odd models a class is labelled through its
 * representative avoiding infinity; on even models by v(T) v(T^c).
 */
ThetaResolvents resolvent_theta(const HyperellipticCurve& curve);

struct RationalTheta {
  bool found = false;
  std::optional<ThetaClass> witness;
  bool fast_path = false;
};

/// Odd models: the class of (g-1) infinity, without computing resolvents.
/// Otherwise a linear factor of either resolvent.
RationalTheta has_rational_theta(const HyperellipticCurve& curve);
/// The linear-factor test on already computed resolvents.
RationalTheta rational_theta_from_resolvents(const ThetaResolvents& r);

struct ThetaCycleTypes {
  std::vector<int> odd;
  std::vector<int> even;
};

/// Frobenius at p acting on the odd and on the even classes, from f mod p.
ThetaCycleTypes theta_frobenius_oracle(const HyperellipticCurve& curve, std::uint64_t p);

}  // namespace rankcert

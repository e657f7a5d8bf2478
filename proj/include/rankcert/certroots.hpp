#pragma once

// Certified isolation of the complex roots of a monic squarefree integer
// polynomial, and exact recovery of integers from balls.

#include <optional>
#include <stdexcept>
#include <vector>

#include "rankcert/ball.hpp"
#include "rankcert/exactpoly.hpp"

namespace rankcert {

inline constexpr mpfr_prec_t kStartPrecision = 128;
inline constexpr mpfr_prec_t kMaxPrecision = 1048576;

class PrecisionExhausted : public std::runtime_error {
 public:
  PrecisionExhausted() : std::runtime_error("precision exhausted") {}
};

/// One disjoint inclusion disk per root.
struct RootIsolation {
  IntPoly polynomial;
  std::vector<ComplexBall> balls;
  mpfr_prec_t precision = 0;
};

/**
 * Aberth-Ehrlich iteration followed by a posteriori certification.
 *
 * For approximations z_i the Weierstrass corrections
 * W_i = f(z_i) / prod_{j != i} (z_i - z_j) are bounded in ball arithmetic and
 * each disk D(z_i, n |W_i|) is accepted once all disks are pairwise disjoint;
 * a connected union of k such disks holds exactly k roots, so each disk then
 * holds exactly one. Precision doubles until that happens.
 *
 * Throws AlgebraError if f is not monic or not squarefree, PrecisionExhausted
 * past kMaxPrecision.
 */
RootIsolation isolate_roots(const IntPoly& f, mpfr_prec_t precision = kStartPrecision);

/// Re-isolates at a higher precision starting from the current midpoints.
RootIsolation refine_isolation(const RootIsolation& iso, mpfr_prec_t precision);

/// The unique integer n with |Im| + rad < 1/2 and n in [Re - rad, Re + rad], if any.
std::optional<BigInt> snap_to_integer(const ComplexBall& b);

}  // namespace rankcert

#pragma once

// Midpoint-radius complex ball arithmetic on top of MPFR.
//
// Midpoints carry the working precision and are rounded to nearest; radii are
// 64-bit MPFR numbers rounded upward. Every operation adds a bound for its own
// rounding error to the radius, so the exact result always lies in the ball.

#include <mpfr.h>

#include <span>
#include <string>
#include <vector>

#include "rankcert/exactpoly.hpp"

namespace rankcert {

inline constexpr mpfr_prec_t kRadiusPrecision = 64;

/// RAII handle for an mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = kRadiusPrecision) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept : Real(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

 private:
  mpfr_t v_;
};

/// Closed disk {z : |z - (re + i im)| <= rad}.
struct ComplexBall {
  Real re, im, rad;

  explicit ComplexBall(mpfr_prec_t prec = 128) : re(prec), im(prec), rad(kRadiusPrecision) {}

  mpfr_prec_t precision() const { return re.precision(); }

  static ComplexBall exact(long re, long im, mpfr_prec_t prec);
  /// Ball around an integer; zero radius when the integer fits the precision.
  static ComplexBall from_int(const BigInt& v, mpfr_prec_t prec);
  /// Ball with the given double midpoint and radius (both taken as exact).
  static ComplexBall from_doubles(double re, double im, double rad, mpfr_prec_t prec);

  double radius() const { return rad.to_double(); }
  std::string to_string(int digits = 20) const;
};

ComplexBall ball_add(const ComplexBall& a, const ComplexBall& b);
ComplexBall ball_sub(const ComplexBall& a, const ComplexBall& b);
ComplexBall ball_mul(const ComplexBall& a, const ComplexBall& b);
ComplexBall ball_neg(const ComplexBall& a);
/// Sum of the values; an empty sum is the exact zero ball at `prec`.
ComplexBall ball_sum(std::span<const ComplexBall> values, mpfr_prec_t prec);
/// Product of the values; an empty product is the exact one ball at `prec`.
ComplexBall ball_prod(std::span<const ComplexBall> values, mpfr_prec_t prec);
/// Horner evaluation of an integer polynomial on a ball.
ComplexBall ball_eval(const IntPoly& f, const ComplexBall& at);

/// Upper bound on max |z| over the ball.
Real magnitude_upper(const ComplexBall& b);
/// Lower bound on min |z| over the ball (negative when the ball meets 0).
Real magnitude_lower(const ComplexBall& b);
bool contains_zero(const ComplexBall& b);
/// True when the two disks are certainly disjoint.
bool disjoint(const ComplexBall& a, const ComplexBall& b);
/// True when the disk of `inner` lies inside the disk of `outer`.
bool contains(const ComplexBall& outer, const ComplexBall& inner);

/// Coefficients of prod (x - roots[k]) in ball arithmetic, constant term first.
std::vector<ComplexBall> ball_poly_from_roots(std::span<const ComplexBall> roots, mpfr_prec_t prec);

}  // namespace rankcert

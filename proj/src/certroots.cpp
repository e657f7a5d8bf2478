#include "rankcert/certroots.hpp"

#include <climits>
#include <cmath>
#include <numbers>

#include "rankcert/factorq.hpp"

namespace rankcert {

namespace {

// Plain complex number at working precision, round-to-nearest.
struct Cx {
  Real re, im;
  explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

Cx cx_add(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Cx r(p);
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx cx_sub(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Cx r(p);
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx cx_mul(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Cx r(p);
  Real t(p);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

bool cx_is_zero(const Cx& a) { return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get()); }

Cx cx_div(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Real den(p), t(p);
  mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
  Cx r(p);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), r.re.get(), den.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
  return r;
}

// Exponent e with 2^(e-1) <= |a| < 2^e; very negative for zero.
long cx_exponent(const Cx& a) {
  Real m;
  mpfr_hypot(m.get(), a.re.get(), a.im.get(), MPFR_RNDU);
  if (mpfr_zero_p(m.get())) return LONG_MIN / 2;
  return mpfr_get_exp(m.get());
}

std::vector<Cx> initial_points(const IntPoly& f, mpfr_prec_t p) {
  const int n = f.degree();
  // Fujiwara-type bound: 2 * max |a_{n-k}|^(1/k).
  double log_bound = -1e300;
  for (int k = 1; k <= n; ++k) {
    const BigInt& a = f.coeffs()[n - k];
    if (a == 0) continue;
    const double l = static_cast<double>(mpz_sizeinbase(a.get_mpz_t(), 2)) / k;
    log_bound = std::max(log_bound, l);
  }
  const double radius = std::ldexp(1.0, static_cast<int>(std::ceil(log_bound)) + 1);
  std::vector<Cx> z;
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n + 0.7 / n + 0.3;
    Cx c(p);
    mpfr_set_d(c.re.get(), radius * std::cos(theta), MPFR_RNDN);
    mpfr_set_d(c.im.get(), radius * std::sin(theta), MPFR_RNDN);
    z.push_back(std::move(c));
  }
  return z;
}

// Aberth-Ehrlich sweeps until every correction is below 2^-(p-8) relative.
void aberth(const IntPoly& f, std::vector<Cx>& z, mpfr_prec_t p, int max_iter) {
  const std::size_t n = z.size();
  std::vector<Cx> coeffs;
  for (const auto& a : f.coeffs()) {
    Cx c(p);
    mpfr_set_z(c.re.get(), a.get_mpz_t(), MPFR_RNDN);
    coeffs.push_back(std::move(c));
  }
  Cx one(p);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  int settled_sweeps = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    bool settled = true;
    for (std::size_t i = 0; i < n; ++i) {
      Cx fv = coeffs.back(), dv(p);
      for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k) {
        dv = cx_add(cx_mul(dv, z[i], p), fv, p);
        fv = cx_add(cx_mul(fv, z[i], p), coeffs[k], p);
      }
      if (cx_is_zero(fv)) continue;
      if (cx_is_zero(dv)) {
        mpfr_nextabove(z[i].re.get());
        settled = false;
        continue;
      }
      Cx newton = cx_div(fv, dv, p);
      Cx s(p);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Cx d = cx_sub(z[i], z[j], p);
        if (cx_is_zero(d)) continue;
        s = cx_add(s, cx_div(one, d, p), p);
      }
      Cx denom = cx_sub(one, cx_mul(newton, s, p), p);
      Cx w = cx_is_zero(denom) ? newton : cx_div(newton, denom, p);
      z[i] = cx_sub(z[i], w, p);
      const long scale = std::max<long>(1, cx_exponent(z[i]));
      if (cx_exponent(w) > scale - static_cast<long>(p) + 8) settled = false;
    }
    if (settled && ++settled_sweeps >= 2) return;
  }
}

// Certified disks D(z_i, n |W_i|); empty when some bound fails.
std::vector<ComplexBall> certify(const IntPoly& f, const std::vector<Cx>& z, mpfr_prec_t p) {
  const std::size_t n = z.size();
  std::vector<ComplexBall> pts;
  for (const auto& c : z) {
    ComplexBall b(p);
    mpfr_set(b.re.get(), c.re.get(), MPFR_RNDN);
    mpfr_set(b.im.get(), c.im.get(), MPFR_RNDN);
    pts.push_back(std::move(b));
  }
  std::vector<ComplexBall> out;
  for (std::size_t i = 0; i < n; ++i) {
    ComplexBall value = ball_eval(f, pts[i]);
    ComplexBall denom = ComplexBall::exact(1, 0, p);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom = ball_mul(denom, ball_sub(pts[i], pts[j]));
    Real low = magnitude_lower(denom);
    if (mpfr_sgn(low.get()) <= 0) return {};
    Real r = magnitude_upper(value);
    mpfr_div(r.get(), r.get(), low.get(), MPFR_RNDU);
    mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    ComplexBall b = pts[i];
    mpfr_set(b.rad.get(), r.get(), MPFR_RNDU);
    out.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!disjoint(out[i], out[j])) return {};
  return out;
}

RootIsolation run_isolation(const IntPoly& f, std::vector<Cx> z, mpfr_prec_t precision) {
  for (mpfr_prec_t p = precision; p <= kMaxPrecision; p *= 2) {
    std::vector<Cx> zp;
    for (const auto& c : z) {
      Cx d(p);
      mpfr_set(d.re.get(), c.re.get(), MPFR_RNDN);
      mpfr_set(d.im.get(), c.im.get(), MPFR_RNDN);
      zp.push_back(std::move(d));
    }
    for (int attempt = 0; attempt < 4; ++attempt) {
      aberth(f, zp, p, attempt == 0 ? 2000 : 50);
      auto balls = certify(f, zp, p);
      if (!balls.empty()) return {f, std::move(balls), p};
    }
    z = std::move(zp);
  }
  throw PrecisionExhausted();
}

void check_input(const IntPoly& f) {
  if (f.degree() < 1) throw AlgebraError("root isolation of a constant polynomial");
  if (f.leading() != 1) throw AlgebraError("root isolation expects a monic polynomial");
  if (!is_squarefree(f)) throw AlgebraError("root isolation expects a squarefree polynomial");
}

}  // namespace

RootIsolation isolate_roots(const IntPoly& f, mpfr_prec_t precision) {
  check_input(f);
  return run_isolation(f, initial_points(f, precision), precision);
}

RootIsolation refine_isolation(const RootIsolation& iso, mpfr_prec_t precision) {
  std::vector<Cx> z;
  for (const auto& b : iso.balls) {
    Cx c(precision);
    mpfr_set(c.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_set(c.im.get(), b.im.get(), MPFR_RNDN);
    z.push_back(std::move(c));
  }
  return run_isolation(iso.polynomial, std::move(z), precision);
}

std::optional<BigInt> snap_to_integer(const ComplexBall& b) {
  Real t;
  mpfr_abs(t.get(), b.im.get(), MPFR_RNDU);
  mpfr_add(t.get(), t.get(), b.rad.get(), MPFR_RNDU);
  if (mpfr_cmp_d(t.get(), 0.5) >= 0) return std::nullopt;
  const mpfr_prec_t p = std::max<mpfr_prec_t>(b.precision(), kRadiusPrecision) + 8;
  Real lo(p), hi(p);
  mpfr_sub(lo.get(), b.re.get(), b.rad.get(), MPFR_RNDD);
  mpfr_add(hi.get(), b.re.get(), b.rad.get(), MPFR_RNDU);
  BigInt ceil_lo, floor_hi;
  mpfr_get_z(ceil_lo.get_mpz_t(), lo.get(), MPFR_RNDU);
  mpfr_get_z(floor_hi.get_mpz_t(), hi.get(), MPFR_RNDD);
  if (ceil_lo != floor_hi) return std::nullopt;
  return ceil_lo;
}

}  // namespace rankcert

#include "rankcert/ball.hpp"

#include <algorithm>

namespace rankcert {

namespace {

// rad += 2^-prec * |x|, rounded up; skipped when the producing operation was exact.
void add_rounding(Real& rad, const Real& x, int ternary, mpfr_prec_t prec) {
  if (ternary == 0) return;
  Real t;
  mpfr_abs(t.get(), x.get(), MPFR_RNDU);
  mpfr_mul_2si(t.get(), t.get(), -static_cast<long>(prec), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), t.get(), MPFR_RNDU);
}

// |re| + |im| rounded up.
Real l1_upper(const ComplexBall& b) {
  Real t, u;
  mpfr_abs(t.get(), b.re.get(), MPFR_RNDU);
  mpfr_abs(u.get(), b.im.get(), MPFR_RNDU);
  mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDU);
  return t;
}

}  // namespace

ComplexBall ComplexBall::exact(long re, long im, mpfr_prec_t prec) {
  ComplexBall b(prec);
  int t1 = mpfr_set_si(b.re.get(), re, MPFR_RNDN);
  int t2 = mpfr_set_si(b.im.get(), im, MPFR_RNDN);
  add_rounding(b.rad, b.re, t1, prec);
  add_rounding(b.rad, b.im, t2, prec);
  return b;
}

ComplexBall ComplexBall::from_int(const BigInt& v, mpfr_prec_t prec) {
  ComplexBall b(prec);
  int t = mpfr_set_z(b.re.get(), v.get_mpz_t(), MPFR_RNDN);
  add_rounding(b.rad, b.re, t, prec);
  return b;
}

ComplexBall ComplexBall::from_doubles(double re, double im, double rad, mpfr_prec_t prec) {
  ComplexBall b(prec);
  int t1 = mpfr_set_d(b.re.get(), re, MPFR_RNDN);
  int t2 = mpfr_set_d(b.im.get(), im, MPFR_RNDN);
  mpfr_set_d(b.rad.get(), rad, MPFR_RNDU);
  add_rounding(b.rad, b.re, t1, prec);
  add_rounding(b.rad, b.im, t2, prec);
  return b;
}

std::string ComplexBall::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "[%.*Rg %+.*Rgi +/- %.3Rg]", digits, re.get(), digits, im.get(), rad.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

ComplexBall ball_add(const ComplexBall& a, const ComplexBall& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  ComplexBall r(prec);
  int t1 = mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  int t2 = mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(r.rad.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
  add_rounding(r.rad, r.re, t1, prec);
  add_rounding(r.rad, r.im, t2, prec);
  return r;
}

ComplexBall ball_neg(const ComplexBall& a) {
  ComplexBall r = a;
  mpfr_neg(r.re.get(), r.re.get(), MPFR_RNDN);
  mpfr_neg(r.im.get(), r.im.get(), MPFR_RNDN);
  return r;
}

ComplexBall ball_sub(const ComplexBall& a, const ComplexBall& b) { return ball_add(a, ball_neg(b)); }

ComplexBall ball_mul(const ComplexBall& a, const ComplexBall& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Real p1(prec), p2(prec), p3(prec), p4(prec);
  const int t1 = mpfr_mul(p1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  const int t2 = mpfr_mul(p2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  const int t3 = mpfr_mul(p3.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  const int t4 = mpfr_mul(p4.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  ComplexBall r(prec);
  const int t5 = mpfr_sub(r.re.get(), p1.get(), p2.get(), MPFR_RNDN);
  const int t6 = mpfr_add(r.im.get(), p3.get(), p4.get(), MPFR_RNDN);

  // Propagated input error: |a| rb + |b| ra + ra rb.
  Real ma = l1_upper(a), mb = l1_upper(b), t;
  mpfr_mul(r.rad.get(), ma.get(), b.rad.get(), MPFR_RNDU);
  mpfr_mul(t.get(), mb.get(), a.rad.get(), MPFR_RNDU);
  mpfr_add(r.rad.get(), r.rad.get(), t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
  mpfr_add(r.rad.get(), r.rad.get(), t.get(), MPFR_RNDU);

  add_rounding(r.rad, p1, t1, prec);
  add_rounding(r.rad, p2, t2, prec);
  add_rounding(r.rad, p3, t3, prec);
  add_rounding(r.rad, p4, t4, prec);
  add_rounding(r.rad, r.re, t5, prec);
  add_rounding(r.rad, r.im, t6, prec);
  return r;
}

ComplexBall ball_sum(std::span<const ComplexBall> values, mpfr_prec_t prec) {
  ComplexBall acc = ComplexBall::exact(0, 0, prec);
  for (const auto& v : values) acc = ball_add(acc, v);
  return acc;
}

ComplexBall ball_prod(std::span<const ComplexBall> values, mpfr_prec_t prec) {
  ComplexBall acc = ComplexBall::exact(1, 0, prec);
  for (const auto& v : values) acc = ball_mul(acc, v);
  return acc;
}

ComplexBall ball_eval(const IntPoly& f, const ComplexBall& at) {
  const mpfr_prec_t prec = at.precision();
  if (f.is_zero()) return ComplexBall::exact(0, 0, prec);
  ComplexBall acc = ComplexBall::from_int(f.leading(), prec);
  for (int k = f.degree() - 1; k >= 0; --k)
    acc = ball_add(ball_mul(acc, at), ComplexBall::from_int(f.coeffs()[k], prec));
  return acc;
}

Real magnitude_upper(const ComplexBall& b) {
  Real m;
  mpfr_hypot(m.get(), b.re.get(), b.im.get(), MPFR_RNDU);
  mpfr_add(m.get(), m.get(), b.rad.get(), MPFR_RNDU);
  return m;
}

Real magnitude_lower(const ComplexBall& b) {
  Real m;
  mpfr_hypot(m.get(), b.re.get(), b.im.get(), MPFR_RNDD);
  mpfr_sub(m.get(), m.get(), b.rad.get(), MPFR_RNDD);
  return m;
}

bool contains_zero(const ComplexBall& b) { return mpfr_sgn(magnitude_lower(b).get()) <= 0; }

bool disjoint(const ComplexBall& a, const ComplexBall& b) {
  return mpfr_sgn(magnitude_lower(ball_sub(a, b)).get()) > 0;
}

bool contains(const ComplexBall& outer, const ComplexBall& inner) {
  ComplexBall mo = outer, mi = inner;
  mpfr_set_zero(mo.rad.get(), 1);
  mpfr_set_zero(mi.rad.get(), 1);
  Real d = magnitude_upper(ball_sub(mo, mi));
  mpfr_add(d.get(), d.get(), inner.rad.get(), MPFR_RNDU);
  return mpfr_lessequal_p(d.get(), outer.rad.get()) != 0;
}

std::vector<ComplexBall> ball_poly_from_roots(std::span<const ComplexBall> roots, mpfr_prec_t prec) {
  std::vector<ComplexBall> c;
  c.push_back(ComplexBall::exact(1, 0, prec));
  for (const auto& root : roots) {
    std::vector<ComplexBall> next;
    next.reserve(c.size() + 1);
    next.push_back(ball_neg(ball_mul(root, c[0])));
    for (std::size_t k = 1; k < c.size(); ++k) next.push_back(ball_sub(c[k - 1], ball_mul(root, c[k])));
    next.push_back(c.back());
    c = std::move(next);
  }
  return c;
}

}  // namespace rankcert

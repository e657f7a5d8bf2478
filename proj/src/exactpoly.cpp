#include "rankcert/exactpoly.hpp"

#include <algorithm>

namespace rankcert {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw AlgebraError("zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

RatPoly to_rat(const IntPoly& f) {
  std::vector<BigRat> c;
  c.reserve(f.size());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

std::pair<IntPoly, BigRat> primitive_integer(const RatPoly& f) {
  if (f.is_zero()) return {IntPoly{}, BigRat(0)};
  BigInt den = 1;
  for (const auto& v : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<BigInt> c;
  c.reserve(f.size());
  for (const auto& v : f.coeffs()) c.push_back(v.get_num() * (den / v.get_den()));
  IntPoly g(std::move(c));
  BigInt cont = content(g);
  if (g.leading() < 0) cont = -cont;
  return {divexact(g, cont), make_rat(cont, den)};
}

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& v : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  BigInt c = content(f);
  if (f.leading() < 0) c = -c;
  return divexact(f, c);
}

IntPoly divexact(const IntPoly& f, const BigInt& d) {
  if (d == 1) return f;
  std::vector<BigInt> c(f.coeffs());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw AlgebraError("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const BigInt& lcb = b.leading();
  std::vector<BigInt> r(a.coeffs());
  int e = a.degree() - db + 1;
  int dr = a.degree();
  while (dr >= db) {
    BigInt lead = r[dr];
    for (int i = 0; i < dr; ++i) r[i] *= lcb;
    r[dr] = 0;
    const int shift = dr - db;
    for (int i = 0; i < db; ++i) r[i + shift] -= lead * b.coeffs()[i];
    --e;
    --dr;
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  r.resize(static_cast<std::size_t>(dr + 1));
  IntPoly rem(std::move(r));
  if (e > 0) {
    BigInt m;
    mpz_pow_ui(m.get_mpz_t(), lcb.get_mpz_t(), static_cast<unsigned long>(e));
    rem *= m;
  }
  return rem;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw AlgebraError("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  const int db = b.degree();
  const BigInt& lcb = b.leading();
  std::vector<BigInt> r(a.coeffs());
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int dr = a.degree(); dr >= db; --dr) {
    if (r[dr] == 0) continue;
    if (!mpz_divisible_p(r[dr].get_mpz_t(), lcb.get_mpz_t())) return std::nullopt;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), r[dr].get_mpz_t(), lcb.get_mpz_t());
    const int shift = dr - db;
    for (int i = 0; i <= db; ++i) r[i + shift] -= t * b.coeffs()[i];
    q[shift] = std::move(t);
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw AlgebraError("division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  const int db = b.degree();
  std::vector<BigRat> r(a.coeffs());
  std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - db + 1));
  const BigRat inv = 1 / b.leading();
  for (int dr = a.degree(); dr >= db; --dr) {
    if (r[dr] == 0) continue;
    BigRat t = r[dr] * inv;
    const int shift = dr - db;
    for (int i = 0; i <= db; ++i) r[i + shift] -= t * b.coeffs()[i];
    q[shift] = std::move(t);
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly monic(const RatPoly& f) {
  if (f.is_zero()) return f;
  return f * BigRat(1 / f.leading());
}

namespace {

BigInt ipow(const BigInt& b, long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero()) return primitive_part(b0);
  if (b0.is_zero()) return primitive_part(a0);
  IntPoly a = primitive_part(a0), b = primitive_part(b0);
  if (b.degree() > a.degree()) std::swap(a, b);
  BigInt g = 1, h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return primitive_part(b);
    if (r.degree() == 0) return IntPoly{BigInt(1)};
    a = std::move(b);
    b = divexact(r, g * ipow(h, delta));
    g = a.leading();
    if (delta > 0) h = exact_quotient(ipow(g, delta), ipow(h, delta - 1));
  }
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return monic(to_rat(poly_gcd(primitive_integer(a).first, primitive_integer(b).first)));
}

RatPoly squarefree_part(const RatPoly& f) {
  if (f.is_zero()) throw AlgebraError("squarefree part of the zero polynomial");
  if (f.degree() == 0) return RatPoly{BigRat(1)};
  return monic(divmod(f, poly_gcd(f, derivative(f))).first);
}

bool is_squarefree_exact(const RatPoly& f) {
  if (f.is_zero()) return false;
  return poly_gcd(f, derivative(f)).degree() == 0;
}

BigInt resultant(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) throw AlgebraError("resultant with the zero polynomial");
  IntPoly a = a0, b = b0;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -1;
  }
  if (b.degree() == 0) return sign * ipow(b.leading(), a.degree());
  const BigInt ca = content(a), cb = content(b);
  a = divexact(a, ca);
  b = divexact(b, cb);
  const BigInt t = ipow(ca, b.degree()) * ipow(cb, a.degree());
  BigInt g = 1, h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = divexact(r, g * ipow(h, delta));
    g = a.leading();
    if (delta > 0) h = exact_quotient(ipow(g, delta), ipow(h, delta - 1));
    if (b.degree() == 0) break;
  }
  h = exact_quotient(ipow(b.leading(), a.degree()), ipow(h, a.degree() - 1));
  return sign * t * h;
}

BigRat resultant(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) throw AlgebraError("resultant with the zero polynomial");
  auto [A, ua] = primitive_integer(a);
  auto [B, ub] = primitive_integer(b);
  BigRat scale = 1;
  for (int i = 0; i < b.degree(); ++i) scale *= ua;
  for (int i = 0; i < a.degree(); ++i) scale *= ub;
  return scale * BigRat(resultant(A, B));
}

BigRat discriminant(const RatPoly& f) {
  if (f.degree() < 1) throw AlgebraError("discriminant of a constant polynomial");
  const long d = f.degree();
  BigRat r = resultant(f, derivative(f)) / f.leading();
  if (((d * (d - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

BigInt discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw AlgebraError("discriminant of a constant polynomial");
  const long d = f.degree();
  BigInt r = exact_quotient(resultant(f, derivative(f)), f.leading());
  if (((d * (d - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

IntegralMonic make_integral_monic(const RatPoly& f) {
  if (f.degree() < 1) throw AlgebraError("integral model of a constant polynomial");
  BigInt den = 1;
  for (const auto& v : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  // scale = |den * lc(den * f)|; every coefficient a_i scale^(n-i) / a_n is then integral.
  BigRat scale = abs(BigRat(den) * BigRat(den) * f.leading());
  const int n = f.degree();
  std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
  BigRat power = 1;
  for (int i = n; i >= 0; --i) {
    BigRat v = f.coeffs()[i] * power / f.leading();
    if (v.get_den() != 1) throw AlgebraError("internal: non-integral monic model");
    c[i] = v.get_num();
    power *= scale;
  }
  return {IntPoly(std::move(c)), scale};
}

}  // namespace rankcert

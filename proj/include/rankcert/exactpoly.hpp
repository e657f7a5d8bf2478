#pragma once

// Exact integers, rationals and dense univariate polynomials over them.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rankcert {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Thrown on violated preconditions of the algebra routines (zero or constant inputs).
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds a reduced rational num/den. Throws AlgebraError if den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den = 1);

/**
 * Dense polynomial with coefficients in T, constant term first.
 *
 * No trailing zeros are ever stored, so the zero polynomial has an empty
 * coefficient vector and degree() == -1.
 */
template <class T>
class DensePoly {
 public:
  using Scalar = T;

  DensePoly() = default;
  explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static DensePoly constant(const T& value) { return DensePoly(std::vector<T>{value}); }
  static DensePoly monomial(const T& value, std::size_t deg) {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = value;
    return DensePoly(std::move(c));
  }
  static DensePoly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }

  /// Coefficient of x^i; zero past the degree.
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw AlgebraError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  T operator()(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  DensePoly& operator+=(const DensePoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const T& s) { return a *= s; }
  friend DensePoly operator*(const T& s, DensePoly a) { return a *= s; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(r));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

/// Polynomial over Q.
using RatPoly = DensePoly<BigRat>;
/// Polynomial over Z.
using IntPoly = DensePoly<BigInt>;

template <class T>
DensePoly<T> derivative(const DensePoly<T>& f) {
  if (f.degree() < 1) return {};
  std::vector<T> d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f.coeffs()[i] * T(static_cast<unsigned long>(i));
  return DensePoly<T>(std::move(d));
}

template <class T>
DensePoly<T> pow(const DensePoly<T>& base, unsigned exp) {
  DensePoly<T> r = DensePoly<T>::constant(T(1));
  DensePoly<T> b = base;
  while (exp) {
    if (exp & 1u) r = r * b;
    exp >>= 1u;
    if (exp) b = b * b;
  }
  return r;
}

// Conversions between Z[x] and Q[x].
RatPoly to_rat(const IntPoly& f);
/// f = unit * F with F primitive, lc(F) > 0. Zero maps to (0, 0).
std::pair<IntPoly, BigRat> primitive_integer(const RatPoly& f);

// Integer polynomial helpers.
BigInt content(const IntPoly& f);
/// Primitive part with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);
/// Divides every coefficient exactly by d.
IntPoly divexact(const IntPoly& f, const BigInt& d);
/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// a / b if b divides a in Z[x], nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// Division with remainder over Q. Throws AlgebraError on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly monic(const RatPoly& f);

/// Monic generator of the ideal (a, b); gcd(0, 0) = 0.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);
/// Primitive gcd over Z with positive leading coefficient (subresultant PRS).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Product of the distinct irreducible factors of f, monic.
RatPoly squarefree_part(const RatPoly& f);
bool is_squarefree_exact(const RatPoly& f);

/// Sylvester resultant via the subresultant PRS.
BigInt resultant(const IntPoly& a, const IntPoly& b);
BigRat resultant(const RatPoly& a, const RatPoly& b);

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
BigRat discriminant(const RatPoly& f);
BigInt discriminant(const IntPoly& f);

/// Monic integral model g(y) = scale^d f(y / scale) / lc(f); roots map as y = scale * x.
struct IntegralMonic {
  IntPoly poly;
  BigRat scale;
};
IntegralMonic make_integral_monic(const RatPoly& f);

}  // namespace rankcert

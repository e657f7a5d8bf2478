#pragma once

// Factorization of integer polynomials over Q: finite-field factorization,
// Frobenius degree patterns, Hensel lifting and Zassenhaus recombination.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankcert/exactpoly.hpp"

namespace rankcert {

/// Raised when a prime does not satisfy the preconditions for a modular step
/// (divides the leading coefficient, or the reduction is not squarefree).
class BadPrime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Dense polynomial over F_p, constant term first, coefficients in [0, p).
class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(std::vector<std::uint64_t> coeffs, std::uint64_t p);
  /// Reduction of an integer polynomial modulo p.
  static ModPoly reduce(const IntPoly& f, std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  /// Lift to Z[x] with coefficients in [0, p).
  IntPoly to_int() const;

  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

 private:
  void trim();
  std::vector<std::uint64_t> c_;
  std::uint64_t p_ = 2;
};

ModPoly operator+(const ModPoly& a, const ModPoly& b);
ModPoly operator-(const ModPoly& a, const ModPoly& b);
ModPoly operator*(const ModPoly& a, const ModPoly& b);
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly monic(const ModPoly& f);
ModPoly derivative(const ModPoly& f);
ModPoly poly_gcd(const ModPoly& a, const ModPoly& b);
/// base^e mod m.
ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m);

struct ModFactor {
  ModPoly poly;  ///< monic irreducible
  int multiplicity = 1;
};

/// Complete factorization of f mod p into monic irreducibles (squarefree,
/// distinct-degree, then equal-degree splitting). Throws BadPrime if p | lc(f).
std::vector<ModFactor> factor_mod_p(const IntPoly& f, std::uint64_t p);

/// Multiset of irreducible factor degrees of a squarefree reduction; the
/// cycle type of Frobenius on the roots.
struct DegreePattern {
  std::uint64_t prime = 0;
  std::vector<int> degrees;  ///< ascending

  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
};

/// Throws BadPrime if p | lc(f) or f mod p is not squarefree.
DegreePattern degree_pattern(const IntPoly& f, std::uint64_t p);

/// Intersection of the subset-sum closures of the patterns; every degree of a
/// factor of the degree-d polynomial over Q lies in the result.
std::set<int> possible_degrees(const std::vector<DegreePattern>& patterns, int d);

/// Factors of f modulo p^k in Z[x], coefficients in [0, modulus).
struct HenselLift {
  BigInt modulus;
  std::vector<IntPoly> factors;  ///< monic, lc(f) * product == f mod modulus
};

/// 2^deg * ceil(||f||_2) * |lc(f)|; bounds lc(f) times any monic-normalized factor.
BigInt mignotte_bound(const IntPoly& f);

/// Quadratic multifactor Hensel lifting of the monic modular factors of f
/// until the modulus exceeds 2 * bound.
HenselLift hensel_lift(const IntPoly& f, const std::vector<ModPoly>& modular_factors,
                       const BigInt& bound);

struct FactorizationQ {
  BigRat unit;
  /// Primitive irreducibles with positive leading coefficient, canonical order.
  std::vector<std::pair<IntPoly, int>> factors;

  /// Degrees of the irreducible factors counted with multiplicity, ascending.
  std::vector<int> degrees() const;
  bool has_linear_factor() const;
};

/// unit * prod factor^mult, expanded.
RatPoly expand(const FactorizationQ& fac);

/// Complete factorization over Q. Throws AlgebraError on the zero polynomial.
FactorizationQ factor_over_q(const RatPoly& f);
FactorizationQ factor_over_q(const IntPoly& f);

/// True when the degree patterns at `primes` good primes rule out every proper factor degree.
bool irreducible_by_degree_patterns(const IntPoly& f, int primes = 8);

/// Fast path over degree patterns, falling back to the full factorization.
bool is_irreducible_over_q(const RatPoly& f);
bool is_irreducible_over_q(const IntPoly& f);

/// Squarefree test: a squarefree reduction at a prime not dividing lc(f) is
/// a proof; falls back to the exact gcd with the derivative.
bool is_squarefree(const IntPoly& f);

/// Canonical order on primitive factors: degree, then coefficients from the constant term.
bool canonical_less(const IntPoly& a, const IntPoly& b);

}  // namespace rankcert

#pragma once

// One-parameter families y^2 = f_t(x): exclusion sets, a designated good
// fiber, and scans over integer specializations.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankcert/certify.hpp"
#include "rankcert/polytext.hpp"

namespace rankcert {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// num(t) / den(t), den nonzero.
struct RationalFunction {
  RatPoly num;
  RatPoly den{BigRat(1)};
};

struct FamilyCurve {
  std::vector<RationalFunction> coeffs;  ///< coeffs[i] multiplies x^i
  std::optional<BigRat> good_fiber;

  int degree_x() const { return static_cast<int>(coeffs.size()) - 1; }
  int genus() const { return (degree_x() - 1) / 2; }
  /// f_a(x); throws FamilyError when a denominator vanishes at a.
  RatPoly fiber(const BigRat& a) const;
};

FamilyCurve family_from_bipoly(const BiPoly& f);

/// F(t, x) = D(t) f_t(x) with D the lcm of the denominators, as x-coefficients in Q[t].
std::vector<RatPoly> cleared_coefficients(const FamilyCurve& fam);
/// disc_x F(t, x) as a polynomial in t, by evaluation at deg + 1 points and interpolation.
RatPoly family_discriminant(const FamilyCurve& fam);

struct ExclusionSet {
  std::vector<BigRat> z1;  ///< roots of denominators and of the discriminant
  std::vector<BigRat> z2;  ///< roots of the discriminant and of the leading coefficient
};

/// Throws FamilyError("family is generically singular") for an identically zero discriminant.
ExclusionSet exclusion_sets(const FamilyCurve& fam);

/// Direct evaluation: the denominator, leading-coefficient or singular-fiber
/// condition that holds at a, or nullopt when none does.
std::optional<std::string> why_excluded(const FamilyCurve& fam, const BigRat& a);

struct GoodFiberCheck {
  BigRat b;
  bool transitive = false;
  OrbitReport report;
};

/// Throws FamilyError when b is excluded.
GoodFiberCheck check_good_fiber(const FamilyCurve& fam, const BigRat& b, const ExclusionSet& z);
GoodFiberCheck check_good_fiber(const FamilyCurve& fam, const BigRat& b);

struct ScanOptions {
  bool full_prop1 = false;  ///< theta resolvents when a fiber's resolvent is reducible
  unsigned long height_bound = kDefaultHeightBound;
};

enum class SkipKind { InZ1, InZ2, Inconclusive };
std::string to_string(SkipKind k);

struct Skipped {
  BigInt a;
  SkipKind kind;
  std::string details;
};

struct ScanReport {
  ExclusionSet exclusions;
  std::vector<std::pair<BigInt, Certificate>> certified;
  std::vector<Skipped> skipped;
  std::optional<GoodFiberCheck> good_fiber;
};

ScanReport scan(const FamilyCurve& fam, long lo, long hi, const ScanOptions& options = {});

}  // namespace rankcert

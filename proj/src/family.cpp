#include "rankcert/family.hpp"

#include <algorithm>

namespace rankcert {

namespace {

RatPoly poly_lcm(const RatPoly& a, const RatPoly& b) { return monic(divmod(a * b, poly_gcd(a, b)).first); }

BigRat eval(const RatPoly& p, const BigRat& t) { return p(t); }

// Fraction-free determinant.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Sylvester matrix determinant of a and b at formal degrees da, db.
BigInt sylvester_det(const std::vector<BigInt>& a, int da, const std::vector<BigInt>& b, int db) {
  const int size = da + db;
  std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size, 0));
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k) m[r][r + da - k] = a[k];
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k) m[db + r][r + db - k] = b[k];
  return bareiss_det(std::move(m));
}

// Newton interpolation through (xs[i], ys[i]).
RatPoly interpolate(const std::vector<BigRat>& xs, std::vector<BigRat> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  RatPoly result{ys[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) result = result * RatPoly{BigRat(-xs[i]), BigRat(1)} + RatPoly{ys[i]};
  return result;
}

std::vector<BigRat> rational_roots(const RatPoly& p) {
  std::vector<BigRat> roots;
  if (p.degree() < 1) return roots;
  for (const auto& [factor, mult] : factor_over_q(p).factors)
    if (factor.degree() == 1) roots.push_back(make_rat(-factor.coeff(0), factor.coeff(1)));
  return roots;
}

void insert_sorted(std::vector<BigRat>& set, const std::vector<BigRat>& values) {
  for (const auto& v : values)
    if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
  std::sort(set.begin(), set.end());
}

bool member(const std::vector<BigRat>& set, const BigRat& a) {
  return std::binary_search(set.begin(), set.end(), a);
}

}  // namespace

RatPoly FamilyCurve::fiber(const BigRat& a) const {
  std::vector<BigRat> c;
  for (const auto& rf : coeffs) {
    const BigRat d = eval(rf.den, a);
    if (d == 0) throw FamilyError("a coefficient denominator vanishes at t = " + a.get_str());
    c.push_back(eval(rf.num, a) / d);
  }
  return RatPoly(std::move(c));
}

FamilyCurve family_from_bipoly(const BiPoly& f) {
  const int n = f.degree_x();
  if (n < 3) throw FamilyError("family must have degree at least 3 in x");
  std::vector<std::vector<BigRat>> c(n + 1);
  for (const auto& [k, v] : f.terms) {
    auto& row = c[k.first];
    if (static_cast<int>(row.size()) <= k.second) row.resize(k.second + 1);
    row[k.second] = v;
  }
  FamilyCurve fam;
  for (auto& row : c) fam.coeffs.push_back({RatPoly(std::move(row)), RatPoly{BigRat(1)}});
  return fam;
}

std::vector<RatPoly> cleared_coefficients(const FamilyCurve& fam) {
  RatPoly d{BigRat(1)};
  for (const auto& rf : fam.coeffs) {
    if (rf.den.is_zero()) throw FamilyError("zero denominator in family coefficient");
    d = poly_lcm(d, rf.den);
  }
  std::vector<RatPoly> out;
  for (const auto& rf : fam.coeffs) out.push_back(rf.num * divmod(d, rf.den).first);
  return out;
}

RatPoly family_discriminant(const FamilyCurve& fam) {
  const std::vector<RatPoly> rat = cleared_coefficients(fam);
  const int n = static_cast<int>(rat.size()) - 1;
  if (n < 1 || rat.back().is_zero()) throw FamilyError("family has no leading x coefficient");
  // Integral coefficients in t, so every evaluation is an integer matrix.
  BigInt den = 1;
  int e = 0;
  for (const auto& p : rat) {
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    e = std::max(e, p.degree());
  }
  const int bound = (2 * n - 1) * e;
  std::vector<BigRat> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    const BigRat t(k);
    std::vector<BigInt> a(n + 1), b(n);
    for (int i = 0; i <= n; ++i) {
      const BigRat v = rat[i](t) * den;
      a[i] = v.get_num();
    }
    for (int i = 1; i <= n; ++i) b[i - 1] = a[i] * i;
    xs.push_back(t);
    ys.emplace_back(sylvester_det(a, n, b, n - 1));
  }
  const RatPoly res = interpolate(xs, ys);
  RatPoly lc = rat.back();
  lc *= BigRat(den);
  auto [q, r] = divmod(res, lc);
  if (!r.is_zero()) throw AlgebraError("discriminant interpolation is not divisible by the leading coefficient");
  // Undo the integral scaling, disc(den*F) = den^(2n-2) disc(F), and apply the
  // sign relating the resultant to the discriminant.
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(2 * n - 2));
  BigRat factor(1, scale);
  factor.canonicalize();
  if ((n * (n - 1) / 2) % 2) factor = -factor;
  q *= factor;
  return q;
}

ExclusionSet exclusion_sets(const FamilyCurve& fam) {
  const RatPoly disc = family_discriminant(fam);
  if (disc.is_zero()) throw FamilyError("family is generically singular");
  ExclusionSet z;
  const auto disc_roots = rational_roots(disc);
  for (const auto& rf : fam.coeffs) insert_sorted(z.z1, rational_roots(rf.den));
  insert_sorted(z.z1, disc_roots);
  insert_sorted(z.z2, disc_roots);
  insert_sorted(z.z2, rational_roots(cleared_coefficients(fam).back()));
  return z;
}

std::optional<std::string> why_excluded(const FamilyCurve& fam, const BigRat& a) {
  for (std::size_t i = 0; i < fam.coeffs.size(); ++i)
    if (eval(fam.coeffs[i].den, a) == 0) return "denominator of the x^" + std::to_string(i) + " coefficient vanishes";
  const RatPoly f = fam.fiber(a);
  if (f.degree() < fam.degree_x()) return "leading x coefficient vanishes";
  if (!is_squarefree_exact(f)) return "fiber discriminant vanishes";
  return std::nullopt;
}

GoodFiberCheck check_good_fiber(const FamilyCurve& fam, const BigRat& b, const ExclusionSet& z) {
  if (member(z.z1, b) || member(z.z2, b)) throw FamilyError("fiber t = " + b.get_str() + " is excluded");
  const HyperellipticCurve curve = build_curve(fam.fiber(b));
  GoodFiberCheck out;
  out.b = b;
  out.report = compute_orbits(curve, false).report;
  out.transitive = out.report.j2.size() == 1;
  return out;
}

GoodFiberCheck check_good_fiber(const FamilyCurve& fam, const BigRat& b) {
  return check_good_fiber(fam, b, exclusion_sets(fam));
}

std::string to_string(SkipKind k) {
  switch (k) {
    case SkipKind::InZ1: return "InZ1";
    case SkipKind::InZ2: return "InZ2";
    case SkipKind::Inconclusive: return "Inconclusive";
  }
  return "";
}

ScanReport scan(const FamilyCurve& fam, long lo, long hi, const ScanOptions& options) {
  ScanReport report;
  report.exclusions = exclusion_sets(fam);
  if (fam.good_fiber) report.good_fiber = check_good_fiber(fam, *fam.good_fiber, report.exclusions);
  CertifyOptions copts;
  copts.height_bound = options.height_bound;
  copts.theta = options.full_prop1 ? ThetaPolicy::WhenNeeded : ThetaPolicy::Never;
  for (long v = lo; v <= hi; ++v) {
    const BigInt a(v);
    const BigRat at(a);
    if (member(report.exclusions.z1, at)) {
      report.skipped.push_back({a, SkipKind::InZ1, why_excluded(fam, at).value_or("")});
      continue;
    }
    if (member(report.exclusions.z2, at)) {
      report.skipped.push_back({a, SkipKind::InZ2, why_excluded(fam, at).value_or("")});
      continue;
    }
    try {
      const RatPoly f = fam.fiber(at);
      Certificate c = certify_hyperelliptic(f, copts, format_poly(f));
      if (c.verdict == Verdict::RankAtLeastOne) {
        report.certified.emplace_back(a, std::move(c));
      } else {
        std::string details;
        for (const auto& r : c.reasons) details += (details.empty() ? "" : ", ") + to_string(r.kind);
        report.skipped.push_back({a, SkipKind::Inconclusive, details});
      }
    } catch (const std::exception& e) {
      report.skipped.push_back({a, SkipKind::Inconclusive, std::string("error: ") + e.what()});
    }
  }
  return report;
}

}  // namespace rankcert

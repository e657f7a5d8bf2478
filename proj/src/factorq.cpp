#include "rankcert/factorq.hpp"

#include <algorithm>
#include <random>

namespace rankcert {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod_u(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw AlgebraError("inverse of zero modulo p");
  return powmod_u(a, p - 2, p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

// ---------------------------------------------------------------------------
// ModPoly

ModPoly::ModPoly(std::vector<std::uint64_t> coeffs, std::uint64_t p) : c_(std::move(coeffs)), p_(p) {
  for (auto& v : c_) v %= p_;
  trim();
}

ModPoly ModPoly::reduce(const IntPoly& f, std::uint64_t p) {
  std::vector<u64> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
  return ModPoly(std::move(c), p);
}

IntPoly ModPoly::to_int() const {
  std::vector<BigInt> c;
  c.reserve(c_.size());
  for (u64 v : c_) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  const u64 p = a.prime();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = addmod(a.coeff(i), b.coeff(i), p);
  return ModPoly(std::move(c), p);
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  const u64 p = a.prime();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = submod(a.coeff(i), b.coeff(i), p);
  return ModPoly(std::move(c), p);
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  const u64 p = a.prime();
  if (a.is_zero() || b.is_zero()) return ModPoly({}, p);
  std::vector<u64> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const u64 ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = addmod(c[i + j], mulmod(ai, b.coeffs()[j], p), p);
  }
  return ModPoly(std::move(c), p);
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  const u64 p = a.prime();
  if (b.is_zero()) throw AlgebraError("division by the zero polynomial mod p");
  if (a.degree() < b.degree()) return {ModPoly({}, p), a};
  const int db = b.degree();
  const u64 inv = invmod(b.leading(), p);
  std::vector<u64> r(a.coeffs());
  std::vector<u64> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int dr = a.degree(); dr >= db; --dr) {
    if (r[dr] == 0) continue;
    const u64 t = mulmod(r[dr], inv, p);
    const int shift = dr - db;
    for (int i = 0; i <= db; ++i) r[i + shift] = submod(r[i + shift], mulmod(t, b.coeffs()[i], p), p);
    q[shift] = t;
  }
  r.resize(static_cast<std::size_t>(db));
  return {ModPoly(std::move(q), p), ModPoly(std::move(r), p)};
}

ModPoly monic(const ModPoly& f) {
  if (f.is_zero() || f.leading() == 1) return f;
  const u64 inv = invmod(f.leading(), f.prime());
  std::vector<u64> c(f.coeffs());
  for (auto& v : c) v = mulmod(v, inv, f.prime());
  return ModPoly(std::move(c), f.prime());
}

ModPoly derivative(const ModPoly& f) {
  if (f.degree() < 1) return ModPoly({}, f.prime());
  std::vector<u64> c(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) c[i - 1] = mulmod(f.coeffs()[i], i % f.prime(), f.prime());
  return ModPoly(std::move(c), f.prime());
}

ModPoly poly_gcd(const ModPoly& a0, const ModPoly& b0) {
  ModPoly a = a0, b = b0;
  while (!b.is_zero()) {
    ModPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m) {
  ModPoly r({1}, m.prime());
  ModPoly b = divmod(base, m).second;
  r = divmod(r, m).second;
  while (e) {
    if (e & 1) r = divmod(r * b, m).second;
    e >>= 1;
    if (e) b = divmod(b * b, m).second;
  }
  return r;
}

namespace {

ModPoly mod_x(u64 p) { return ModPoly({0, 1}, p); }

// s*a + t*b == 1 for coprime a, b.
std::pair<ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b) {
  const u64 p = a.prime();
  ModPoly r0 = a, r1 = b;
  ModPoly s0({1}, p), s1({}, p), t0({}, p), t1({1}, p);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1;
    ModPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw AlgebraError("xgcd of non-coprime polynomials mod p");
  ModPoly inv({invmod(r0.leading(), p)}, p);
  return {s0 * inv, t0 * inv};
}

ModPoly pth_root(const ModPoly& f) {
  const u64 p = f.prime();
  std::vector<u64> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return ModPoly(std::move(c), p);
}

void squarefree_factorization(const ModPoly& f, int mult_scale, std::vector<std::pair<ModPoly, int>>& out) {
  const u64 p = f.prime();
  if (f.degree() < 1) return;
  ModPoly fp = derivative(f);
  if (fp.is_zero()) {
    squarefree_factorization(pth_root(f), mult_scale * static_cast<int>(p), out);
    return;
  }
  ModPoly c = poly_gcd(f, fp);
  ModPoly w = divmod(f, c).first;
  int i = 1;
  while (!w.is_one()) {
    ModPoly y = poly_gcd(w, c);
    ModPoly z = divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(monic(z), i * mult_scale);
    ++i;
    w = std::move(y);
    c = divmod(c, w).first;
  }
  if (c.degree() > 0) squarefree_factorization(pth_root(c), mult_scale * static_cast<int>(p), out);
}

// Pairs (product of all irreducible factors of degree d, d) of a monic squarefree f.
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f) {
  const u64 p = f.prime();
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly rest = f;
  ModPoly h = divmod(mod_x(p), rest).second;
  int i = 0;
  while (rest.degree() >= 2 * (i + 1)) {
    ++i;
    h = powmod(h, p, rest);
    ModPoly g = poly_gcd(h - mod_x(p), rest);
    if (!g.is_one()) {
      rest = divmod(rest, g).first;
      h = divmod(h, rest).second;
      out.emplace_back(std::move(g), i);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

void equal_degree(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const u64 p = f.prime();
  while (true) {
    std::vector<u64> a(static_cast<std::size_t>(f.degree()));
    for (auto& v : a) v = rng() % p;
    ModPoly r(std::move(a), p);
    if (r.degree() < 1) continue;
    ModPoly s = r, t = r;
    if (p == 2) {
      for (int i = 1; i < d; ++i) {
        t = divmod(t * t, f).second;
        s = s + t;
      }
    } else {
      for (int i = 1; i < d; ++i) {
        t = powmod(t, p, f);
        s = divmod(s * t, f).second;
      }
      s = powmod(s, (p - 1) / 2, f) - ModPoly({1}, p);
    }
    ModPoly g = poly_gcd(s, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

bool mod_less(const ModPoly& a, const ModPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

ModPoly checked_reduce(const IntPoly& f, u64 p) {
  ModPoly g = ModPoly::reduce(f, p);
  if (g.degree() != f.degree()) throw BadPrime("prime divides the leading coefficient");
  return g;
}

bool mod_squarefree(const ModPoly& g) {
  if (g.degree() < 1) return true;
  ModPoly d = derivative(g);
  if (d.is_zero()) return false;
  return poly_gcd(g, d).is_one();
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const IntPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw BadPrime("modulus is not prime");
  ModPoly g = monic(checked_reduce(f, p));
  std::vector<std::pair<ModPoly, int>> sqf;
  squarefree_factorization(g, 1, sqf);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
  std::vector<ModFactor> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<ModPoly> irr;
      equal_degree(block, d, rng, irr);
      for (auto& q : irr) out.push_back({std::move(q), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return mod_less(a.poly, b.poly);
  });
  return out;
}

DegreePattern degree_pattern(const IntPoly& f, std::uint64_t p) {
  ModPoly g = monic(checked_reduce(f, p));
  if (!mod_squarefree(g)) throw BadPrime("reduction is not squarefree");
  DegreePattern pat{p, {}};
  for (const auto& [block, d] : distinct_degree(g))
    for (int k = 0; k < block.degree() / d; ++k) pat.degrees.push_back(d);
  std::sort(pat.degrees.begin(), pat.degrees.end());
  return pat;
}

std::set<int> possible_degrees(const std::vector<DegreePattern>& patterns, int d) {
  std::vector<bool> allowed(static_cast<std::size_t>(d + 1), true);
  for (const auto& pat : patterns) {
    std::vector<bool> sums(static_cast<std::size_t>(d + 1), false);
    sums[0] = true;
    for (int k : pat.degrees)
      for (int s = d; s >= k; --s)
        if (sums[s - k]) sums[s] = true;
    for (int s = 0; s <= d; ++s) allowed[s] = allowed[s] && sums[s];
  }
  std::set<int> out;
  for (int s = 0; s <= d; ++s)
    if (allowed[s]) out.insert(s);
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting

namespace {

IntPoly reduce_mod(const IntPoly& f, const BigInt& m) {
  std::vector<BigInt> c(f.coeffs());
  for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const BigInt& m) { return reduce_mod(a * b, m); }

// Division by a monic b over Z/m.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a0, const IntPoly& b, const BigInt& m) {
  IntPoly a = reduce_mod(a0, m);
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  const int db = b.degree();
  std::vector<BigInt> r(a.coeffs());
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int dr = a.degree(); dr >= db; --dr) {
    mpz_fdiv_r(r[dr].get_mpz_t(), r[dr].get_mpz_t(), m.get_mpz_t());
    if (r[dr] == 0) continue;
    BigInt t = r[dr];
    const int shift = dr - db;
    for (int i = 0; i <= db; ++i) r[i + shift] -= t * b.coeffs()[i];
    q[shift] = std::move(t);
  }
  r.resize(static_cast<std::size_t>(db));
  return {reduce_mod(IntPoly(std::move(q)), m), reduce_mod(IntPoly(std::move(r)), m)};
}

struct LiftState {
  IntPoly g, h, s, t;
};

// One quadratic step: f == g*h and s*g + t*h == 1 mod m  ->  the same mod m^2.
LiftState lift_step(const IntPoly& f, const LiftState& st, const BigInt& m) {
  const BigInt mm = m * m;
  IntPoly e = reduce_mod(f - st.g * st.h, mm);
  auto [q, r] = divmod_monic(mul_mod(st.s, e, mm), st.h, mm);
  IntPoly h2 = reduce_mod(st.h + r, mm);
  auto [g2, rem] = divmod_monic(f, h2, mm);
  if (!rem.is_zero()) throw std::logic_error("hensel: lifted factor does not divide");
  IntPoly b = reduce_mod(st.s * g2 + st.t * h2 - IntPoly{BigInt(1)}, mm);
  auto [c, d] = divmod_monic(mul_mod(st.s, b, mm), h2, mm);
  IntPoly s2 = reduce_mod(st.s - d, mm);
  auto [t2, rem2] = divmod_monic(reduce_mod(IntPoly{BigInt(1)} - s2 * g2, mm), h2, mm);
  if (!rem2.is_zero()) throw std::logic_error("hensel: Bezout coefficients failed to lift");
  return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

void lift_recursive(const IntPoly& target, const std::vector<ModPoly>& facs, std::size_t lo, std::size_t hi,
                    const BigInt& p, const BigInt& modulus, std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(reduce_mod(target, modulus));
    return;
  }
  const u64 pu = facs[lo].prime();
  const std::size_t mid = lo + (hi - lo) / 2;
  ModPoly left({1}, pu), right({1}, pu);
  for (std::size_t i = lo; i < mid; ++i) left = left * facs[i];
  for (std::size_t i = mid; i < hi; ++i) right = right * facs[i];
  auto [s, t] = xgcd(left, right);
  LiftState st{left.to_int(), right.to_int(), s.to_int(), t.to_int()};
  BigInt m = p;
  while (m < modulus) {
    st = lift_step(reduce_mod(target, m * m), st, m);
    m *= m;
  }
  lift_recursive(st.g, facs, lo, mid, p, modulus, out);
  lift_recursive(st.h, facs, mid, hi, p, modulus, out);
}

}  // namespace

BigInt mignotte_bound(const IntPoly& f) {
  BigInt norm2 = 0;
  for (const auto& v : f.coeffs()) norm2 += v * v;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  if (root * root < norm2) root += 1;
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(std::max(f.degree(), 0)));
  return two_pow * root * abs(f.leading());
}

HenselLift hensel_lift(const IntPoly& f, const std::vector<ModPoly>& modular_factors, const BigInt& bound) {
  if (modular_factors.empty()) throw AlgebraError("hensel lift of an empty factor list");
  const u64 pu = modular_factors.front().prime();
  ModPoly fp = checked_reduce(f, pu);
  if (!mod_squarefree(fp)) throw BadPrime("reduction is not squarefree");
  ModPoly prod({1}, pu);
  for (const auto& g : modular_factors) {
    if (g.leading() != 1) throw AlgebraError("hensel lift expects monic modular factors");
    prod = prod * g;
  }
  if (!(prod == monic(fp))) throw AlgebraError("modular factors do not multiply to f mod p");

  const BigInt p(static_cast<unsigned long>(pu));
  BigInt modulus = p;
  while (modulus <= 2 * bound) modulus *= modulus;

  BigInt lc_inv;
  BigInt lc = f.leading();
  mpz_fdiv_r(lc.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  IntPoly target = reduce_mod(f * lc_inv, modulus);

  HenselLift out{modulus, {}};
  lift_recursive(target, modular_factors, 0, modular_factors.size(), p, modulus, out.factors);
  return out;
}

// ---------------------------------------------------------------------------
// Factorization over Q

bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<int> FactorizationQ::degrees() const {
  std::vector<int> d;
  for (const auto& [poly, mult] : factors)
    for (int k = 0; k < mult; ++k) d.push_back(poly.degree());
  std::sort(d.begin(), d.end());
  return d;
}

bool FactorizationQ::has_linear_factor() const {
  return std::any_of(factors.begin(), factors.end(), [](const auto& pf) { return pf.first.degree() == 1; });
}

RatPoly expand(const FactorizationQ& fac) {
  RatPoly r{fac.unit};
  for (const auto& [poly, mult] : fac.factors) r = r * pow(to_rat(poly), static_cast<unsigned>(mult));
  return r;
}

namespace {

BigInt symmetric_mod(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

struct PrimeChoice {
  u64 p = 0;
  std::size_t count = 0;
  std::vector<DegreePattern> patterns;
};

PrimeChoice choose_prime(const IntPoly& f, int wanted) {
  PrimeChoice best;
  u64 p = static_cast<u64>(std::max(f.degree(), 2));
  int tried = 0;
  for (int guard = 0; tried < wanted && guard < 5000; ++guard) {
    p = next_prime(p);
    DegreePattern pat;
    try {
      pat = degree_pattern(f, p);
    } catch (const BadPrime&) {
      continue;
    }
    ++tried;
    if (best.p == 0 || pat.degrees.size() < best.count) {
      best.p = p;
      best.count = pat.degrees.size();
    }
    best.patterns.push_back(std::move(pat));
  }
  if (best.p == 0) throw std::runtime_error("no good prime found for factorization");
  return best;
}

// Irreducible factors of a primitive squarefree F with lc(F) > 0.
std::vector<IntPoly> zassenhaus(const IntPoly& F) {
  if (F.degree() <= 1) return {F};
  PrimeChoice choice = choose_prime(F, 8);
  if (choice.count == 1) return {F};
  const std::set<int> allowed = possible_degrees(choice.patterns, F.degree());
  if (allowed.size() == 2) return {F};

  std::vector<ModPoly> modular;
  for (auto& mf : factor_mod_p(F, choice.p)) modular.push_back(std::move(mf.poly));
  const HenselLift lift = hensel_lift(F, modular, mignotte_bound(F));
  const BigInt& M = lift.modulus;

  std::vector<IntPoly> found;
  IntPoly rest = F;
  std::vector<std::size_t> live(lift.factors.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  std::size_t size = 1;
  while (2 * size <= live.size()) {
    bool hit = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      int deg = 0;
      for (std::size_t i : pick) deg += lift.factors[live[i]].degree();
      if (allowed.count(deg)) {
        const BigInt& lc = rest.leading();
        // Constant-term filter before the full product.
        BigInt c0 = lc;
        for (std::size_t i : pick) c0 = symmetric_mod(c0 * lift.factors[live[i]].coeff(0), M);
        const BigInt rest0 = rest.coeff(0) * lc;
        if (c0 != 0 && rest0 != 0 && !mpz_divisible_p(rest0.get_mpz_t(), c0.get_mpz_t())) {
          // not a factor
        } else {
          IntPoly cand{lc};
          for (std::size_t i : pick) cand = reduce_mod(cand * lift.factors[live[i]], M);
          std::vector<BigInt> sc(cand.coeffs());
          for (auto& v : sc) v = symmetric_mod(v, M);
          IntPoly g = primitive_part(IntPoly(std::move(sc)));
          if (g.degree() > 0) {
            if (auto q = divide_exact(rest, g)) {
              found.push_back(g);
              rest = primitive_part(*q);
              std::vector<std::size_t> next;
              for (std::size_t i = 0; i < live.size(); ++i)
                if (std::find(pick.begin(), pick.end(), i) == pick.end()) next.push_back(live[i]);
              live = std::move(next);
              hit = true;
              break;
            }
          }
        }
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == live.size() - size + (k - 1)) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!hit) ++size;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

}  // namespace

FactorizationQ factor_over_q(const RatPoly& f) {
  if (f.is_zero()) throw AlgebraError("factorization of the zero polynomial");
  FactorizationQ out;
  if (f.degree() == 0) {
    out.unit = f.leading();
    return out;
  }
  // Yun's squarefree decomposition over Q.
  std::vector<std::pair<RatPoly, int>> parts;
  {
    RatPoly d0 = derivative(f);
    RatPoly a = poly_gcd(f, d0);
    RatPoly b = divmod(f, a).first;
    RatPoly c = divmod(d0, a).first;
    RatPoly d = c - derivative(b);
    int i = 1;
    while (b.degree() > 0) {
      RatPoly g = poly_gcd(b, d);
      if (g.degree() > 0) parts.emplace_back(g, i);
      b = divmod(b, g).first;
      c = divmod(d, g).first;
      d = c - derivative(b);
      ++i;
    }
  }
  BigRat lc_prod = 1;
  for (const auto& [part, mult] : parts) {
    for (auto& irr : zassenhaus(primitive_integer(part).first)) {
      for (int k = 0; k < mult; ++k) lc_prod *= irr.leading();
      out.factors.emplace_back(std::move(irr), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  out.unit = f.leading() / lc_prod;
  if (!(expand(out) == f)) throw std::logic_error("factorization identity check failed");
  return out;
}

FactorizationQ factor_over_q(const IntPoly& f) { return factor_over_q(to_rat(f)); }

bool is_squarefree(const IntPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() < 1) return true;
  u64 p = 2;
  for (int i = 0; i < 30; ++i, p = next_prime(p)) {
    ModPoly g = ModPoly::reduce(f, p);
    if (g.degree() != f.degree()) continue;
    if (mod_squarefree(g)) return true;
  }
  return is_squarefree_exact(to_rat(f));
}

bool irreducible_by_degree_patterns(const IntPoly& f, int primes) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  std::vector<DegreePattern> pats;
  u64 p = 2;
  for (int guard = 0; static_cast<int>(pats.size()) < primes && guard < 2000; ++guard) {
    p = next_prime(p);
    try {
      pats.push_back(degree_pattern(f, p));
    } catch (const BadPrime&) {
      continue;
    }
    if (possible_degrees(pats, f.degree()).size() == 2) return true;
  }
  return false;
}

bool is_irreducible_over_q(const IntPoly& f) {
  if (f.degree() < 1) throw AlgebraError("irreducibility of a constant polynomial");
  if (f.degree() == 1) return true;
  if (!is_squarefree(f)) return false;
  if (irreducible_by_degree_patterns(f, 8)) return true;
  const FactorizationQ fac = factor_over_q(f);
  return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

bool is_irreducible_over_q(const RatPoly& f) {
  if (f.degree() < 1) throw AlgebraError("irreducibility of a constant polynomial");
  return is_irreducible_over_q(primitive_integer(f).first);
}

}  // namespace rankcert

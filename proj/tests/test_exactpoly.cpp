#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rankcert/certroots.hpp"
#include "rankcert/exactpoly.hpp"

using namespace rankcert;

namespace {

RatPoly rp(std::initializer_list<long> c) {
  std::vector<BigRat> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

// Sylvester determinant by rational Gaussian elimination.
BigRat sylvester_oracle(const RatPoly& a, const RatPoly& b) {
  const int m = a.degree(), n = b.degree(), size = m + n;
  std::vector<std::vector<BigRat>> s(size, std::vector<BigRat>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + m - k] = a.coeff(k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + n - k] = b.coeff(k);
  BigRat det = 1;
  for (int c = 0; c < size; ++c) {
    int piv = c;
    while (piv < size && s[piv][c] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != c) {
      std::swap(s[piv], s[c]);
      det = -det;
    }
    det *= s[c][c];
    for (int r = c + 1; r < size; ++r) {
      const BigRat f = s[r][c] / s[c][c];
      for (int k = c; k < size; ++k) s[r][k] -= f * s[c][k];
    }
  }
  return det;
}

RatPoly random_poly(std::mt19937_64& rng, int deg, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<BigRat> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
  if (c.back() == 0) c.back() = 1;
  return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("gcd examples") {
  CHECK(poly_gcd(rp({-1, 0, 1}), rp({1, -2, 1})) == rp({-1, 1}));
  CHECK(poly_gcd(rp({0, 0, 0, 1}), RatPoly{}) == rp({0, 0, 0, 1}));
  CHECK(poly_gcd(rp({1, 0, 1}), rp({1, 1, 1})) == rp({1}));
  CHECK(sylvester_oracle(rp({1, 0, 1}), rp({1, 1, 1})) != 0);
  CHECK(poly_gcd(rp({0, 0, 2}), rp({0, 3})) == rp({0, 1}));
}

TEST_CASE("gcd divides both inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const RatPoly common = random_poly(rng, trial % 3, 4);
    const RatPoly a = random_poly(rng, 1 + trial % 4, 5) * common;
    const RatPoly b = random_poly(rng, 1 + trial % 5, 5) * common;
    const RatPoly g = poly_gcd(a, b);
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
    CHECK(g.degree() >= common.degree());
  }
}

TEST_CASE("squarefree part") {
  // (x-1)^2 (x+2) = x^3 - 3x + 2
  CHECK(squarefree_part(rp({2, -3, 0, 1})) == rp({-2, 1, 1}));
  CHECK(squarefree_part(rp({0, 0, 0, 0, 0, 1})) == rp({0, 1}));
  CHECK(squarefree_part(rp({2, 0, 4})) == (RatPoly{make_rat(1, 2), BigRat(0), BigRat(1)}));
  CHECK_THROWS_AS(squarefree_part(RatPoly{}), AlgebraError);
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(rp({2, -3, 1})) == 1);
  CHECK(discriminant(rp({0, -1, 0, 1})) == 4);
  CHECK(discriminant(rp({1, -2, 1})) == 0);
  CHECK_THROWS_AS(discriminant(rp({5})), AlgebraError);
  // Integer version agrees.
  CHECK(discriminant(IntPoly{0, -1, 0, 1}) == 4);
}

TEST_CASE("discriminant vanishes exactly on non-squarefree input") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    RatPoly f = random_poly(rng, 1 + trial % 5, 3);
    if (trial % 2) f = f * random_poly(rng, 1, 2) * random_poly(rng, 1, 2);
    const bool zero = discriminant(f) == 0;
    CHECK(zero == (poly_gcd(f, derivative(f)).degree() >= 1));
  }
}

TEST_CASE("resultant examples and laws") {
  CHECK(resultant(rp({-2, 1}), rp({1, 0, 1})) == 5);
  CHECK(resultant(rp({-2, 0, 1}), rp({-3, 0, 1})) == 1);
  CHECK(sylvester_oracle(rp({-2, 0, 1}), rp({-3, 0, 1})) == 1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const RatPoly a = random_poly(rng, 1 + trial % 4, 6);
    const RatPoly b = random_poly(rng, 1 + trial % 3, 6);
    const RatPoly c = random_poly(rng, 1 + trial % 5, 6);
    CHECK(resultant(a, b) == sylvester_oracle(a, b));
    const int sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
    CHECK(resultant(b, a) == sign * resultant(a, b));
    CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
  }
}

TEST_CASE("integer resultant agrees with the rational one") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const RatPoly a = random_poly(rng, 2 + trial % 4, 9);
    const RatPoly b = random_poly(rng, 1 + trial % 3, 9);
    CHECK(BigRat(resultant(primitive_integer(a).first, primitive_integer(b).first)) ==
          resultant(to_rat(primitive_integer(a).first), to_rat(primitive_integer(b).first)));
  }
}

TEST_CASE("make_integral_monic examples") {
  auto a = make_integral_monic(rp({-1, 0, 4}));
  CHECK(a.poly == IntPoly{-4, 0, 1});
  CHECK(a.scale == 4);
  auto b = make_integral_monic(rp({1, 1, 0, 0, 0, 0, 1}));
  CHECK(b.poly == IntPoly{1, 1, 0, 0, 0, 0, 1});
  CHECK(b.scale == 1);
  auto c = make_integral_monic(RatPoly{BigRat(-1), BigRat(0), make_rat(1, 3)});
  CHECK(c.poly == IntPoly{-27, 0, 1});
  CHECK(c.scale == 3);
  CHECK_THROWS_AS(make_integral_monic(rp({3})), AlgebraError);
}

TEST_CASE("make_integral_monic root correspondence") {
  const RatPoly f{make_rat(-2, 5), BigRat(1), make_rat(3, 7), make_rat(-5, 2)};
  const auto im = make_integral_monic(f);
  const auto iso = isolate_roots(im.poly);
  const auto [fi, unit] = primitive_integer(f);
  for (const auto& beta : iso.balls) {
    // f(beta/scale) = 0  <=>  sum fi_k beta^k scale^(n-k) = 0
    const int n = fi.degree();
    ComplexBall acc = ComplexBall::exact(0, 0, iso.precision);
    ComplexBall power = ComplexBall::exact(1, 0, iso.precision);
    for (int k = 0; k <= n; ++k) {
      BigInt s = 1;
      mpz_pow_ui(s.get_mpz_t(), im.scale.get_num_mpz_t(), static_cast<unsigned long>(n - k));
      BigInt d = 1;
      mpz_pow_ui(d.get_mpz_t(), im.scale.get_den_mpz_t(), static_cast<unsigned long>(k));
      acc = ball_add(acc, ball_mul(ComplexBall::from_int(fi.coeff(k) * s * d, iso.precision), power));
      power = ball_mul(power, beta);
    }
    CHECK(contains_zero(acc));
  }
}

TEST_CASE("polynomial basics") {
  const RatPoly z;
  CHECK(z.degree() == -1);
  CHECK(z.is_zero());
  CHECK(rp({1, 2, 0, 0}).degree() == 1);
  CHECK_THROWS_AS(z.leading(), AlgebraError);
  CHECK(pow(rp({1, 1}), 3) == rp({1, 3, 3, 1}));
  CHECK(derivative(rp({1, 1, 1, 1})) == rp({1, 2, 3}));
  CHECK(divide_exact(IntPoly{-1, 0, 1}, IntPoly{1, 1}) == IntPoly{-1, 1});
  CHECK_FALSE(divide_exact(IntPoly{1, 0, 1}, IntPoly{1, 1}).has_value());
  CHECK(content(IntPoly{6, -4, 10}) == 2);
  const auto [p, u] = primitive_integer(RatPoly{make_rat(1, 2), make_rat(-1, 3)});
  CHECK(p == IntPoly{-3, 2});
  CHECK(u == make_rat(-1, 6));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "rankcert/certroots.hpp"

using namespace rankcert;

namespace {

bool conjugate_closed(const RootIsolation& iso) {
  for (const auto& b : iso.balls) {
    ComplexBall conj = b;
    mpfr_neg(conj.im.get(), conj.im.get(), MPFR_RNDN);
    bool hit = false;
    for (const auto& c : iso.balls) hit = hit || !disjoint(conj, c);
    if (!hit) return false;
  }
  return true;
}

// Durand-Kerner in long double as an independent numeric reference.
std::vector<std::complex<long double>> reference_roots(const IntPoly& f) {
  const int n = f.degree();
  std::vector<std::complex<long double>> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::pow(std::complex<long double>(0.4L, 0.9L), k);
  for (int iter = 0; iter < 500; ++iter)
    for (int i = 0; i < n; ++i) {
      std::complex<long double> v = 0;
      for (int k = n; k >= 0; --k) v = v * z[i] + static_cast<long double>(f.coeff(k).get_d());
      std::complex<long double> d = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) d *= z[i] - z[j];
      z[i] -= v / d;
    }
  return z;
}

}  // namespace

TEST_CASE("x^2 + 1") {
  const auto iso = isolate_roots(IntPoly{1, 0, 1});
  REQUIRE(iso.balls.size() == 2);
  for (const auto& b : iso.balls) {
    CHECK(b.radius() < std::ldexp(1.0, -50));
    CHECK(std::abs(std::abs(b.im.to_double()) - 1.0) < 1e-12);
    CHECK(contains_zero(ball_eval(iso.polynomial, b)));
  }
  CHECK(conjugate_closed(iso));
}

TEST_CASE("integer roots snap") {
  const auto iso = isolate_roots(IntPoly{-6, 11, -6, 1});
  std::vector<long> got;
  for (const auto& b : iso.balls) {
    auto v = snap_to_integer(b);
    REQUIRE(v);
    got.push_back(v->get_si());
  }
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<long>{1, 2, 3});
}

TEST_CASE("x^5 - x + 1") {
  const IntPoly f{1, -1, 0, 0, 0, 1};
  const auto iso = isolate_roots(f);
  REQUIRE(iso.balls.size() == 5);
  int real = 0;
  for (const auto& b : iso.balls) {
    CHECK(contains_zero(ball_eval(f, b)));
    if (std::abs(b.im.to_double()) <= b.radius()) ++real;
  }
  CHECK(real == 1);
  CHECK(conjugate_closed(iso));
  for (std::size_t i = 0; i < iso.balls.size(); ++i)
    for (std::size_t j = i + 1; j < iso.balls.size(); ++j) CHECK(disjoint(iso.balls[i], iso.balls[j]));
  // Every reference root lies near exactly one ball.
  for (const auto& r : reference_roots(f)) {
    int near = 0;
    for (const auto& b : iso.balls)
      near += std::abs(std::complex<long double>(b.re.to_double(), b.im.to_double()) - r) < 1e-9L;
    CHECK(near == 1);
  }
}

TEST_CASE("refinement does not increase radii") {
  const IntPoly f{1, 1, 0, 0, 0, 0, 1};
  const auto iso = isolate_roots(f);
  const auto fine = refine_isolation(iso, iso.precision * 2);
  REQUIRE(fine.balls.size() == iso.balls.size());
  for (std::size_t i = 0; i < iso.balls.size(); ++i) {
    CHECK(fine.balls[i].radius() <= iso.balls[i].radius());
    CHECK(!disjoint(fine.balls[i], iso.balls[i]));
  }
}

TEST_CASE("input checks") {
  CHECK_THROWS_AS(isolate_roots(IntPoly{1, 0, 2}), AlgebraError);
  CHECK_THROWS_AS(isolate_roots(IntPoly{1, -2, 1}), AlgebraError);
  CHECK_THROWS_AS(isolate_roots(IntPoly{3}), AlgebraError);
}

TEST_CASE("ball arithmetic") {
  const auto a = ComplexBall::exact(1, 2, 128), b = ComplexBall::exact(3, -2, 128);
  std::vector<ComplexBall> ab{a, b};
  const auto s = ball_sum(ab, 128);
  CHECK(s.re.to_double() == 4.0);
  CHECK(s.im.to_double() == 0.0);
  CHECK(s.radius() == 0.0);

  const auto zero = ComplexBall::exact(0, 0, 128);
  const auto p = ball_mul(a, zero);
  CHECK(p.re.is_zero());
  CHECK(p.im.is_zero());
  CHECK(p.radius() == 0.0);

  std::vector<ComplexBall> copies(7, ComplexBall::from_doubles(1.0, 0.0, 0.125, 128));
  const auto n = ball_sum(copies, 128);
  CHECK(n.re.to_double() == 7.0);
  CHECK(n.radius() >= 7 * 0.125);

  // (1 + 2i)(3 - 2i) = 7 + 4i exactly.
  const auto m = ball_mul(a, b);
  CHECK(m.re.to_double() == 7.0);
  CHECK(m.im.to_double() == 4.0);
  CHECK(m.radius() == 0.0);
}

TEST_CASE("rounding is inside the radius") {
  // 1/3 is not representable; the product ball must contain the exact 1.
  ComplexBall third(64);
  mpfr_set_ui(third.re.get(), 1, MPFR_RNDN);
  mpfr_div_ui(third.re.get(), third.re.get(), 3, MPFR_RNDN);
  mpfr_set_d(third.rad.get(), std::ldexp(1.0, -62), MPFR_RNDU);
  const auto three = ComplexBall::exact(3, 0, 64);
  const auto one = ball_mul(third, three);
  CHECK(snap_to_integer(one) == BigInt(1));
  CHECK(contains(one, ComplexBall::exact(1, 0, 64)));
}

TEST_CASE("snap_to_integer") {
  CHECK(snap_to_integer(ComplexBall::from_doubles(2.9999, 0.00001, 0.001, 128)) == BigInt(3));
  CHECK_FALSE(snap_to_integer(ComplexBall::from_doubles(2.5, 0.0, 0.2, 128)).has_value());
  CHECK_FALSE(snap_to_integer(ComplexBall::from_doubles(2.5, 0.0, 0.6, 128)).has_value());
  CHECK_FALSE(snap_to_integer(ComplexBall::from_doubles(3.0, 0.4, 0.2, 128)).has_value());
  CHECK(snap_to_integer(ComplexBall::from_doubles(-4.0, 0.0, 0.0, 128)) == BigInt(-4));
}

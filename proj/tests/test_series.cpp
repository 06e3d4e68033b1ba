#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperlog/errors.hpp"
#include "hyperlog/series.hpp"

using namespace hyperlog;

TEST_CASE("pochhammer") {
  PrecisionGuard g(30);
  CHECK(pochhammer(Real("0.37"), 0) == 1);
  CHECK(pochhammer(Real(1), 4) == 24);
  CHECK(pochhammer(Real(1) / 2, 2) == Real(3) / 4);
  CHECK(pochhammer(Real(-2), 4) == 0);  // hits zero
}

TEST_CASE("f32 basel example at both tolerances") {
  {
    PrecisionGuard g(25);
    auto r = f32_at_1(Real(1), Real(2), Real(2), Real(1e-9));
    Real want = real_pi() * real_pi() / 6;
    CHECK(abs(r.value - want) < 1e-9);
  }
  {
    PrecisionGuard g(45);
    auto r = f32_at_1(Real(1), Real(2), Real(2), Real(1e-30));
    Real want = real_pi() * real_pi() / 6;
    CHECK(abs(r.value - want) < 1e-30);
    CHECK(r.error < 1e-30);
  }
}

TEST_CASE("f32 gauss-summable family F(1,1,a;a,4;1) = 3/2") {
  PrecisionGuard g(30);
  for (const char* a : {"1/3", "7/10", "9/4"}) {
    Real av = to_real(parse_rational(a));
    auto r = f32_at_1(av, av, Real(4), Real(1e-10));
    CHECK(abs(r.value - Real(3) / 2) < 1e-10);
  }
}

TEST_CASE("f32 matches the quadrature-derived closed form at (1/2,5/4,7/4)") {
  PrecisionGuard g(40);
  auto r = f32_at_1(Real(1) / 2, Real(5) / 4, Real(7) / 4, Real(1e-25));
  // (3/2) sqrt2 log(1+sqrt2), fixed by the boundary-integral oracle
  Real want = Real(3) / 2 * sqrt(Real(2)) * log(1 + sqrt(Real(2)));
  CHECK(abs(r.value - want) < 1e-25);
  CHECK(abs(r.value - Real("1.8696757204206915401820602407517")) < 1e-25);
}

TEST_CASE("terminating series is summed exactly") {
  PrecisionGuard g(30);
  auto r = f32_at_1(Real(-3), Real(5), Real(7), Real(1e-20));
  // 1 - 3/35 + (2*2*6)/(30*56*2) - (6*1*6)/(210*504*6)
  Real want = 1 + Real(1) * 1 * (-3) / (5 * 7) +
              Real(2) * 2 * (-3) * (-2) / (Real(5 * 6) * (7 * 8) * 2) +
              Real(6) * 6 * (-3) * (-2) * (-1) / (Real(5 * 6 * 7) * (7 * 8 * 9) * 6);
  CHECK(abs(r.value - want) < 1e-25);
  CHECK(r.error == 0);
}

TEST_CASE("divergence and pole guards") {
  PrecisionGuard g(25);
  CHECK_THROWS_AS(f32_at_1(Real(1), Real(1), Real(1), Real(1e-8)), Divergent);
  CHECK_THROWS_AS(f32_at_1(Real(2), Real("1.5"), Real("1.5"), Real(1e-8)), Divergent);
  CHECK_THROWS_AS(f32_at_1(Real(1), Real(-2), Real(3), Real(1e-8)), Divergent);
  CHECK_THROWS_AS(f32_at_1(Real(1), Real(0), Real(3), Real(1e-8)), Divergent);
}

TEST_CASE("tolerance not met at starved precision") {
  PrecisionGuard g(18);
  CHECK_THROWS_AS(f32_at_1(Real(1) / 2, Real(5) / 4, Real(7) / 4, Real(1e-26)),
                  ToleranceNotMet);
}

TEST_CASE("acceleration against longer direct summation") {
  PrecisionGuard g(30);
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 8; ++trial) {
    // margin s = p4+p5-p3-2 >= 0.5
    Real p3 = Real(1 + static_cast<int>(gen() % 100)) / 50;
    Real s = Real(1) / 2 + Real(static_cast<int>(gen() % 100)) / 50;
    Real p4 = Real(1 + static_cast<int>(gen() % 80)) / 40 + 1;
    Real p5 = p3 + 2 + s - p4;
    if (p5 <= 0) continue;
    const Real tol = Real(1e-10);
    auto accel = f32_at_1(p3, p4, p5, tol);

    long M = 10 * accel.evaluations;
    Real term(1), direct(0);
    for (long k = 0; k < M; ++k) {
      direct += term;
      term *= (k + 1) * (k + p3) / ((k + p4) * (k + p5));
    }
    // first-order bound for the positive remainder of the direct sum
    Real tail_bound = term * (M + 1) / s;
    CAPTURE(static_cast<double>(p3)); CAPTURE(static_cast<double>(p4)); CAPTURE(static_cast<double>(p5));
    CHECK(accel.value >= direct - 10 * tol);
    CHECK(abs(accel.value - direct) <= 2 * tail_bound + 10 * tol);
  }
}

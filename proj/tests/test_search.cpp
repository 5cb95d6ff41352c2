#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gsdesign/errors.hpp"
#include "gsdesign/normal.hpp"
#include "gsdesign/search.hpp"

using namespace gsd;

TEST_CASE("brent_root on simple functions") {
  auto r1 = brent_root([](double x) { return x * x - 4.0; }, 0.0, 5.0, 1e-10);
  CHECK(r1.root == doctest::Approx(2.0).epsilon(1e-9));

  auto r2 = brent_root([](double x) { return norm_cdf(x) - 0.975; }, 0.0, 10.0, 1e-10);
  CHECK(r2.root == doctest::Approx(1.959964).epsilon(1e-6));

  auto r3 = brent_root([](double x) { return x - M_PI; }, 3.0, 4.0, 1e-12);
  CHECK(r3.root == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("brent_root rejects non-bracketing intervals") {
  CHECK_THROWS_AS(brent_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), BracketError);
}

TEST_CASE("brent_root never evaluates outside the bracket") {
  double lo = 0.5, hi = 3.0;
  bool stayed_inside = true;
  auto wrapped = [&](double x) {
    if (x < lo - 1e-15 || x > hi + 1e-15) stayed_inside = false;
    return std::cos(x);  // root at pi/2 inside the bracket
  };
  auto r = brent_root(wrapped, lo, hi, 1e-12);
  CHECK(stayed_inside);
  CHECK(r.root == doctest::Approx(M_PI / 2.0).epsilon(1e-10));
}

TEST_CASE("golden_max on unimodal functions") {
  auto [x1, v1] = golden_max([](double x) { return -(x - 1.0) * (x - 1.0); }, -5.0, 5.0, 1e-10);
  CHECK(x1 == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(v1 == doctest::Approx(0.0));

  auto [x2, v2] = golden_max([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-10);
  CHECK(x2 == doctest::Approx(M_PI / 2.0).epsilon(1e-7));
  CHECK(v2 == doctest::Approx(1.0));

  auto [x3, v3] = golden_max([](double) { return 3.5; }, 0.0, 1.0, 1e-8);
  CHECK(v3 == 3.5);
  CHECK(x3 >= 0.0);
  CHECK(x3 <= 1.0);
}

TEST_CASE("nelder_mead on quadratics") {
  auto res = nelder_mead(
      [](double x, double y) { return (x - 1.0) * (x - 1.0) + (y - 2.0) * (y - 2.0); },
      {0.0, 0.0}, 1e-12);
  CHECK(res.converged);
  CHECK(res.argmin[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(res.argmin[1] == doctest::Approx(2.0).epsilon(1e-6));

  auto res2 = nelder_mead([](double x, double y) { return x * x + y * y; }, {3.0, 4.0}, 1e-12);
  CHECK(res2.converged);
  CHECK(std::fabs(res2.argmin[0]) < 1e-6);
  CHECK(std::fabs(res2.argmin[1]) < 1e-6);
}

TEST_CASE("nelder_mead on the Rosenbrock function") {
  auto rosenbrock = [](double x, double y) {
    const double a = 1.0 - x;
    const double b = y - x * x;
    return a * a + 100.0 * b * b;
  };
  auto res = nelder_mead(rosenbrock, {-1.2, 1.0}, 1e-14, 5000);
  CHECK(res.argmin[0] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(res.argmin[1] == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("nelder_mead is deterministic") {
  auto f = [](double x, double y) {
    return std::sin(3.0 * x) * std::cos(2.0 * y) + 0.1 * (x * x + y * y);
  };
  auto a = nelder_mead(f, {0.3, -0.4}, 1e-10);
  auto b = nelder_mead(f, {0.3, -0.4}, 1e-10);
  CHECK(a.argmin[0] == b.argmin[0]);
  CHECK(a.argmin[1] == b.argmin[1]);
  CHECK(a.value == b.value);
  CHECK(a.iterations == b.iterations);
}

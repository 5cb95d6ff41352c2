#include "gsdesign/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsdesign/errors.hpp"

namespace gsd {

RootResult brent_root(const std::function<double(double)>& f, double lo, double hi,
                      double tol, int max_iter) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return {a, 0.0, 0};
  if (fb == 0.0) return {b, 0.0, 0};
  if (fa * fb > 0.0) {
    throw BracketError("brent_root: interval does not bracket a sign change");
  }
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 1; iter <= max_iter; ++iter) {
    if (fb * fc > 0.0) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return {b, fb, iter};
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      // Inverse quadratic interpolation, falling back to the secant step.
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
      const double min2 = std::fabs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::fabs(d) > tol1) {
      b += d;
    } else {
      b += (xm > 0.0 ? tol1 : -tol1);
    }
    fb = f(b);
  }
  throw ConvergenceError("brent_root: iteration cap exceeded");
}

std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo,
                                     double hi, double tol, int max_iter) {
  if (!(lo < hi)) throw ParameterError("golden_max: requires lo < hi");
  constexpr double kGolden = 0.6180339887498948482;
  double c = hi - kGolden * (hi - lo);
  double d = lo + kGolden * (hi - lo);
  double fc = f(c), fd = f(d);
  int iter = 0;
  while (hi - lo > tol) {
    if (++iter > max_iter) throw ConvergenceError("golden_max: iteration cap exceeded");
    if (fc < fd) {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kGolden * (hi - lo);
      fd = f(d);
    } else {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kGolden * (hi - lo);
      fc = f(c);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

SimplexResult nelder_mead(const std::function<double(double, double)>& f,
                          std::array<double, 2> start, double tol, int max_iter) {
  using Point = std::array<double, 2>;
  auto eval = [&](const Point& p) { return f(p[0], p[1]); };
  auto step = [](double x) { return std::max(0.1, 0.05 * std::fabs(x)); };

  std::array<Point, 3> v;
  v[0] = start;
  v[1] = {start[0] + step(start[0]), start[1]};
  v[2] = {start[0], start[1] + step(start[1])};
  std::array<double, 3> fv{eval(v[0]), eval(v[1]), eval(v[2])};

  auto sort_simplex = [&]() {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    std::array<Point, 3> sv{v[idx[0]], v[idx[1]], v[idx[2]]};
    std::array<double, 3> sf{fv[idx[0]], fv[idx[1]], fv[idx[2]]};
    v = sv;
    fv = sf;
  };
  auto diameter = [&]() {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        d = std::max(d, std::hypot(v[i][0] - v[j][0], v[i][1] - v[j][1]));
    return d;
  };

  int iter = 0;
  for (; iter < max_iter; ++iter) {
    sort_simplex();
    if (fv[2] - fv[0] <= tol && diameter() <= tol) {
      return {v[0], fv[0], iter, true};
    }
    const Point centroid{0.5 * (v[0][0] + v[1][0]), 0.5 * (v[0][1] + v[1][1])};
    auto along = [&](double coef) {
      return Point{centroid[0] + coef * (centroid[0] - v[2][0]),
                   centroid[1] + coef * (centroid[1] - v[2][1])};
    };
    const Point refl = along(1.0);
    const double frefl = eval(refl);
    if (frefl < fv[0]) {
      const Point expd = along(2.0);
      const double fexpd = eval(expd);
      if (fexpd < frefl) {
        v[2] = expd;
        fv[2] = fexpd;
      } else {
        v[2] = refl;
        fv[2] = frefl;
      }
      continue;
    }
    if (frefl < fv[1]) {
      v[2] = refl;
      fv[2] = frefl;
      continue;
    }
    const Point contr = along(frefl < fv[2] ? 0.5 : -0.5);
    const double fcontr = eval(contr);
    if (fcontr < std::min(frefl, fv[2])) {
      v[2] = contr;
      fv[2] = fcontr;
      continue;
    }
    // Shrink toward the best vertex.
    for (int i = 1; i < 3; ++i) {
      v[i] = {v[0][0] + 0.5 * (v[i][0] - v[0][0]), v[0][1] + 0.5 * (v[i][1] - v[0][1])};
      fv[i] = eval(v[i]);
    }
  }
  sort_simplex();
  return {v[0], fv[0], iter, false};
}

}  // namespace gsd

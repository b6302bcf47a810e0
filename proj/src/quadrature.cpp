#include "reslab/quadrature.hpp"

#include <cmath>
#include <vector>

namespace reslab {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const ScalarFn& f, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * tol) {
    return left + right + err / 15.0;
  }
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const ScalarFn& f, double a, double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = simpson(fa, fm, fb, b - a);
  return adapt(f, a, b, fa, fm, fb, whole, std::abs(tol), max_depth);
}

TailLimitResult integral_tail_limit(const ScalarFn& f, int sign, double tol, double t_start,
                                    int max_doublings) {
  TailLimitResult res;
  const double s = sign >= 0 ? 1.0 : -1.0;

  std::vector<double> partial;  // integral_0^{s*T_m}
  double T = t_start;
  double acc = adaptive_simpson(f, 0.0, s * T, 0.1 * tol);
  partial.push_back(acc);

  double prev_extrap = acc;
  bool have_prev = false;
  for (int m = 0; m < max_doublings; ++m) {
    acc += adaptive_simpson(f, s * T, s * 2.0 * T, 0.1 * tol);
    T *= 2.0;
    partial.push_back(acc);

    const std::size_t n = partial.size();
    double extrap = partial.back();
    if (n >= 3) {
      // Aitken delta-squared on the last three partial integrals.
      const double x0 = partial[n - 3], x1 = partial[n - 2], x2 = partial[n - 1];
      const double denom = x2 - 2.0 * x1 + x0;
      if (denom != 0.0) extrap = x2 - (x2 - x1) * (x2 - x1) / denom;
    }
    if (have_prev && std::abs(extrap - prev_extrap) < tol &&
        std::abs(partial[partial.size() - 1] - partial[partial.size() - 2]) < 1e3 * tol) {
      res.converged = true;
      res.value = extrap;
      res.last_width = T;
      return res;
    }
    prev_extrap = extrap;
    have_prev = true;
  }
  res.converged = false;
  res.value = prev_extrap;
  res.last_width = T;
  return res;
}

}  // namespace reslab

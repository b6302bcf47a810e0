#pragma once

#include <functional>
#include <optional>

namespace reslab {

using ScalarFn = std::function<double(double)>;

/// Composite adaptive Simpson integration of f over [a, b] (a > b allowed,
/// the usual sign convention applies). `tol` is an absolute tolerance for
/// the whole interval.
double adaptive_simpson(const ScalarFn& f, double a, double b, double tol = 1e-12,
                        int max_depth = 48);

struct TailLimitResult {
  bool converged = false;
  double value = 0.0;      // extrapolated limit of integral_0^{+-inf} f
  double last_width = 0.0; // half-width of the widest interval actually integrated
};

/// Estimates lim_{T->inf} integral_0^{sign*T} f(z) dz by doubling T and
/// accelerating the sequence with Aitken's delta-squared process. Intended
/// for integrands with decaying tails; fails (converged = false) when the
/// sequence does not settle to `tol`.
TailLimitResult integral_tail_limit(const ScalarFn& f, int sign, double tol = 1e-8,
                                    double t_start = 64.0, int max_doublings = 22);

}  // namespace reslab

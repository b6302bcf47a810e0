#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace reslab {

enum class NonlinearityFamily {
  ArctanScaled,         // s * atan(k x)
  TanhScaled,           // s * tanh(k x)
  AlgebraicSigmoid,     // s * k x / (1 + |k x|)
  PiecewiseSaturation,  // s * clamp(k x, -1, 1)
  Tabulated,
  Zero,
};

std::string to_string(NonlinearityFamily family);

/// Parses the JSON/CLI spelling ("arctan-scaled", "tanh-scaled",
/// "algebraic-sigmoid", "piecewise-saturation", "tabulated", "zero").
/// Throws std::invalid_argument for unknown names.
NonlinearityFamily family_from_string(const std::string& name);

/// A scalar function together with its declared asymptotics. The declared
/// values are load-bearing: every resonance condition is an inequality in
/// them, so they are never inferred from samples. Instances are immutable
/// after construction and the handles must be reentrant.
struct BoundedNonlinearity {
  std::function<double(double)> eval;
  double limit_neg = 0.0;  // value at -inf
  double limit_pos = 0.0;  // value at +inf
  double inf_val = 0.0;
  double sup_val = 0.0;
  std::optional<double> lower_bound;  // alpha with eval(x) >= alpha for all x

  NonlinearityFamily family = NonlinearityFamily::Zero;
  bool strict_bounds = false;  // limit_neg < eval(x) < limit_pos everywhere
  double scale = 1.0;          // builtin parameters (meaningless for tabulated)
  double gain = 1.0;
  bool derivative_form = false;  // true when this is d/dx of the builtin saturator

  // Closed-form companions where available (built-ins).
  std::function<double(double)> derivative;

  double operator()(double x) const { return eval(x); }
  bool is_zero() const;
  /// limit_pos - limit_neg.
  double limit_span() const { return limit_pos - limit_neg; }
};

BoundedNonlinearity zero_nonlinearity();

/// Saturating built-in with analytically exact declared limits, e.g. the
/// arctan family s*atan(k x) with limits -+ s*pi/2. Requires s > 0, k > 0.
BoundedNonlinearity make_builtin_nonlinearity(NonlinearityFamily family, double scale,
                                              double gain);

/// The derivative of the matching built-in saturator. Its antiderivative
/// from 0 is exactly make_builtin_nonlinearity(family, scale, gain), which
/// makes it the natural damping coefficient f with bounded F. Non-negative,
/// so lower_bound = 0.
BoundedNonlinearity make_builtin_derivative(NonlinearityFamily family, double scale,
                                            double gain);

struct TabulatedSpec {
  std::vector<double> x;  // strictly increasing
  std::vector<double> y;
  double limit_neg = 0.0;
  double limit_pos = 0.0;
  double inf_val = 0.0;
  double sup_val = 0.0;
  std::optional<double> lower_bound;
  bool strict_bounds = false;
};

/// Piecewise-linear interior; outside the table the value approaches the
/// declared limit like (distance)^-2, so damping-style tables with zero
/// limits keep integrable tails. Limits are declared, never inferred.
BoundedNonlinearity make_tabulated_nonlinearity(TabulatedSpec spec);

/// F(x) = integral_0^x f(z) dz with F(0) = 0 and declared limits F(+-inf).
/// Built-ins use closed forms; everything else uses adaptive quadrature with
/// Aitken-accelerated tail estimates (tolerance `tail_tol`). Throws
/// std::runtime_error("F limits do not exist numerically") when the tails
/// fail to converge.
BoundedNonlinearity antiderivative_of(const BoundedNonlinearity& f, double tail_tol = 1e-8);

/// Checks that |eval(+-X) - limit_+-| shrinks monotonically over
/// X in {1e2, 1e4, 1e6} and ends below a family-specific tolerance.
bool limits_consistent(const BoundedNonlinearity& nl);

}  // namespace reslab

#include "reslab/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "reslab/quadrature.hpp"
#include "reslab/types.hpp"

namespace reslab {

std::string to_string(NonlinearityFamily family) {
  switch (family) {
    case NonlinearityFamily::ArctanScaled: return "arctan-scaled";
    case NonlinearityFamily::TanhScaled: return "tanh-scaled";
    case NonlinearityFamily::AlgebraicSigmoid: return "algebraic-sigmoid";
    case NonlinearityFamily::PiecewiseSaturation: return "piecewise-saturation";
    case NonlinearityFamily::Tabulated: return "tabulated";
    case NonlinearityFamily::Zero: return "zero";
  }
  return "unknown";
}

NonlinearityFamily family_from_string(const std::string& name) {
  if (name == "arctan-scaled" || name == "arctan") return NonlinearityFamily::ArctanScaled;
  if (name == "tanh-scaled" || name == "tanh") return NonlinearityFamily::TanhScaled;
  if (name == "algebraic-sigmoid") return NonlinearityFamily::AlgebraicSigmoid;
  if (name == "piecewise-saturation") return NonlinearityFamily::PiecewiseSaturation;
  if (name == "tabulated") return NonlinearityFamily::Tabulated;
  if (name == "zero") return NonlinearityFamily::Zero;
  throw std::invalid_argument("unknown nonlinearity family: " + name);
}

bool BoundedNonlinearity::is_zero() const {
  return family == NonlinearityFamily::Zero ||
         (inf_val == 0.0 && sup_val == 0.0 && limit_neg == 0.0 && limit_pos == 0.0);
}

BoundedNonlinearity zero_nonlinearity() {
  BoundedNonlinearity nl;
  nl.eval = [](double) { return 0.0; };
  nl.derivative = [](double) { return 0.0; };
  nl.lower_bound = 0.0;
  nl.family = NonlinearityFamily::Zero;
  return nl;
}

namespace {

void require_positive_params(double s, double k) {
  if (!(s > 0.0) || !(k > 0.0)) {
    throw std::invalid_argument("builtin nonlinearity requires scale > 0 and gain > 0");
  }
}

}  // namespace

BoundedNonlinearity make_builtin_nonlinearity(NonlinearityFamily family, double s, double k) {
  if (family == NonlinearityFamily::Zero) return zero_nonlinearity();
  require_positive_params(s, k);

  BoundedNonlinearity nl;
  nl.family = family;
  nl.scale = s;
  nl.gain = k;
  switch (family) {
    case NonlinearityFamily::ArctanScaled:
      nl.eval = [s, k](double x) { return s * std::atan(k * x); };
      nl.derivative = [s, k](double x) { return s * k / (1.0 + k * x * k * x); };
      nl.limit_pos = s * kPi / 2.0;
      nl.strict_bounds = true;
      break;
    case NonlinearityFamily::TanhScaled:
      nl.eval = [s, k](double x) { return s * std::tanh(k * x); };
      nl.derivative = [s, k](double x) {
        const double c = std::cosh(k * x);
        return s * k / (c * c);
      };
      nl.limit_pos = s;
      nl.strict_bounds = true;
      break;
    case NonlinearityFamily::AlgebraicSigmoid:
      nl.eval = [s, k](double x) { return s * k * x / (1.0 + std::abs(k * x)); };
      nl.derivative = [s, k](double x) {
        const double d = 1.0 + std::abs(k * x);
        return s * k / (d * d);
      };
      nl.limit_pos = s;
      nl.strict_bounds = true;
      break;
    case NonlinearityFamily::PiecewiseSaturation:
      nl.eval = [s, k](double x) { return s * std::clamp(k * x, -1.0, 1.0); };
      nl.derivative = [s, k](double x) { return std::abs(k * x) < 1.0 ? s * k : 0.0; };
      nl.limit_pos = s;
      nl.strict_bounds = false;  // the limits are attained
      break;
    default:
      throw std::invalid_argument("make_builtin_nonlinearity: family has no closed form: " +
                                  to_string(family));
  }
  nl.limit_neg = -nl.limit_pos;
  nl.inf_val = nl.limit_neg;
  nl.sup_val = nl.limit_pos;
  nl.lower_bound = nl.limit_neg;
  return nl;
}

BoundedNonlinearity make_builtin_derivative(NonlinearityFamily family, double s, double k) {
  if (family == NonlinearityFamily::Zero) return zero_nonlinearity();
  const BoundedNonlinearity primitive = make_builtin_nonlinearity(family, s, k);

  BoundedNonlinearity nl;
  nl.family = family;
  nl.scale = s;
  nl.gain = k;
  nl.derivative_form = true;
  nl.eval = primitive.derivative;
  nl.limit_neg = 0.0;
  nl.limit_pos = 0.0;
  nl.inf_val = 0.0;
  nl.sup_val = s * k;  // attained at the origin (or on the core interval)
  nl.lower_bound = 0.0;
  nl.strict_bounds = false;
  return nl;
}

BoundedNonlinearity make_tabulated_nonlinearity(TabulatedSpec spec) {
  const std::size_t m = spec.x.size();
  if (m < 2 || spec.y.size() != m) {
    throw std::invalid_argument("tabulated nonlinearity needs >= 2 matching (x, y) pairs");
  }
  for (std::size_t i = 1; i < m; ++i) {
    if (!(spec.x[i] > spec.x[i - 1])) {
      throw std::invalid_argument("tabulated abscissae must be strictly increasing");
    }
  }
  if (!std::isfinite(spec.limit_neg) || !std::isfinite(spec.limit_pos) ||
      !std::isfinite(spec.inf_val) || !std::isfinite(spec.sup_val)) {
    throw std::invalid_argument("tabulated nonlinearity requires finite declared bounds");
  }

  BoundedNonlinearity nl;
  nl.family = NonlinearityFamily::Tabulated;
  nl.limit_neg = spec.limit_neg;
  nl.limit_pos = spec.limit_pos;
  nl.inf_val = spec.inf_val;
  nl.sup_val = spec.sup_val;
  nl.lower_bound = spec.lower_bound;
  nl.strict_bounds = spec.strict_bounds;

  auto xs = std::make_shared<std::vector<double>>(std::move(spec.x));
  auto ys = std::make_shared<std::vector<double>>(std::move(spec.y));
  const double lneg = spec.limit_neg;
  const double lpos = spec.limit_pos;
  nl.eval = [xs, ys, lneg, lpos](double x) {
    const auto& xv = *xs;
    const auto& yv = *ys;
    if (x <= xv.front()) {
      // rational tail: reaches the declared limit like (distance)^-2
      const double u = xv.front() - x;
      return lneg + (yv.front() - lneg) / ((1.0 + u) * (1.0 + u));
    }
    if (x >= xv.back()) {
      const double u = x - xv.back();
      return lpos + (yv.back() - lpos) / ((1.0 + u) * (1.0 + u));
    }
    const auto it = std::upper_bound(xv.begin(), xv.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xv.begin()) - 1;
    const double w = (x - xv[i]) / (xv[i + 1] - xv[i]);
    return yv[i] + w * (yv[i + 1] - yv[i]);
  };
  return nl;
}

BoundedNonlinearity antiderivative_of(const BoundedNonlinearity& f, double tail_tol) {
  if (f.is_zero()) return zero_nonlinearity();

  if (f.derivative_form && f.family != NonlinearityFamily::Tabulated &&
      f.family != NonlinearityFamily::Zero) {
    return make_builtin_nonlinearity(f.family, f.scale, f.gain);
  }

  // Numeric path: quadrature from 0 plus extrapolated tails.
  const auto fp = integral_tail_limit(f.eval, +1, tail_tol);
  const auto fn = integral_tail_limit(f.eval, -1, tail_tol);
  if (!fp.converged || !fn.converged) {
    throw std::runtime_error("F limits do not exist numerically");
  }

  BoundedNonlinearity F;
  F.family = NonlinearityFamily::Tabulated;
  F.limit_pos = fp.value;
  F.limit_neg = fn.value;
  F.strict_bounds = false;

  const auto fe = f.eval;
  F.eval = [fe](double x) { return adaptive_simpson(fe, 0.0, x, 1e-11); };
  F.derivative = fe;

  // inf/sup estimated from a cumulative sweep plus the declared tail limits.
  double lo = std::min({0.0, fp.value, fn.value});
  double hi = std::max({0.0, fp.value, fn.value});
  for (const int sign : {+1, -1}) {
    double acc = 0.0;
    double prev = 0.0;
    for (int i = 1; i <= 240; ++i) {
      const double x = sign * std::pow(10.0, -2.0 + 8.0 * i / 240.0);
      acc += adaptive_simpson(fe, prev, x, 1e-11);
      prev = x;
      lo = std::min(lo, acc);
      hi = std::max(hi, acc);
    }
  }
  F.inf_val = lo;
  F.sup_val = hi;
  F.lower_bound = lo;
  return F;
}

bool limits_consistent(const BoundedNonlinearity& nl) {
  const double xs[] = {1e2, 1e4, 1e6};
  double prev_pos = std::numeric_limits<double>::infinity();
  double prev_neg = std::numeric_limits<double>::infinity();
  double dev_pos = 0.0;
  double dev_neg = 0.0;
  for (const double X : xs) {
    dev_pos = std::abs(nl.eval(X) - nl.limit_pos);
    dev_neg = std::abs(nl.eval(-X) - nl.limit_neg);
    if (dev_pos > prev_pos + 1e-15 || dev_neg > prev_neg + 1e-15) return false;
    prev_pos = dev_pos;
    prev_neg = dev_neg;
  }

  double tol = 1e-12;
  const double X = xs[2];
  switch (nl.family) {
    case NonlinearityFamily::ArctanScaled:
    case NonlinearityFamily::AlgebraicSigmoid:
      tol = 2.0 * nl.scale / (nl.gain * X) + 1e-12;
      break;
    case NonlinearityFamily::TanhScaled:
    case NonlinearityFamily::PiecewiseSaturation:
    case NonlinearityFamily::Zero:
      tol = 1e-12;
      break;
    case NonlinearityFamily::Tabulated:
      // covers both rational-tail tables (u^-2 approach) and quadrature
      // antiderivatives (1/X approach)
      tol = 4.0 * std::max(std::abs(nl.sup_val - nl.inf_val), 1.0) / X + 1e-10;
      break;
  }
  if (nl.derivative_form) tol = std::max(tol, 2.0 * nl.scale / nl.gain / (X * X) + 1e-12);
  return dev_pos <= tol && dev_neg <= tol;
}

}  // namespace reslab

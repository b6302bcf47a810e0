#pragma once

#include <Eigen/Dense>

#include <numbers>

namespace reslab {

/// Phase-plane coordinate xi = (zeta, eta) = (x(0), x'(0)).
/// Index 0 is the position, index 1 the velocity.
using PhasePoint = Eigen::Vector2d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace reslab

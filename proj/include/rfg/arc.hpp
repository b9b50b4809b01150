#pragma once

#include <complex>

namespace rfg {

using Complex = std::complex<double>;

/// Closed arc of the unit circle, given by its midpoint and angular length.
struct Arc {
  Complex midpoint{1.0, 0.0}; ///< unit modulus
  double length = 0.0;        ///< radians, in [0, 2*pi]

  static Arc from_angle(double mid_arg, double length);

  /// Argument of the midpoint in (-pi, pi].
  double mid_arg() const { return std::arg(midpoint); }
};

} // namespace rfg

#pragma once

#include <functional>
#include <span>

namespace rfg::quad {

inline constexpr double kDefaultTolerance = 1e-12;

/// Integral of f over (lo, hi); hi may be +infinity and lo may be -infinity.
/// The interval is split at every break point inside it so that integrable
/// singularities only ever sit at the end of a piece; no piece is evaluated
/// exactly at its end points. Throws NonIntegrable on a non-finite result.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 std::span<const double> breaks = {}, double tolerance = kDefaultTolerance);

} // namespace rfg::quad

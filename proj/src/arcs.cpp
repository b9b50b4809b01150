#include "rfg/arcs.hpp"

#include <cmath>
#include <numbers>

#include "rfg/error.hpp"

namespace rfg {

ArcPair ArcPair::make(Complex m1, Complex m2, double length) {
  return ArcPair{Arc{m1, length}, Arc{m2, length}, length};
}

double angular_gap(const Arc& x, const Arc& y) {
  return std::abs(std::arg(x.midpoint * std::conj(y.midpoint)));
}

bool arcs_disjoint(const Arc& x, const Arc& y) {
  return angular_gap(x, y) > 0.5 * (x.length + y.length);
}

bool all_disjoint(std::span<const Arc> arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (!arcs_disjoint(arcs[i], arcs[j])) return false;
  return true;
}

bool same_pair(const ArcPair& x, const ArcPair& y, double tol) {
  auto close = [tol](const Arc& p, const Arc& q) {
    return std::abs(p.midpoint - q.midpoint) <= tol && std::abs(p.length - q.length) <= tol;
  };
  return (close(x.first, y.first) && close(x.second, y.second)) ||
         (close(x.first, y.second) && close(x.second, y.first));
}

std::pair<Complex, Complex> arc_pair_entries(const ArcPair& pair) {
  const double l = pair.common_length;
  if (!(l > 0.0 && l < 2.0 * std::numbers::pi))
    throw Error(ErrorCode::DegenerateLength, "arc length must lie in (0, 2 pi)");
  const Complex m1 = pair.first.midpoint / std::abs(pair.first.midpoint);
  const Complex m2 = pair.second.midpoint / std::abs(pair.second.midpoint);
  if (std::abs(m1 - m2) < 1e-12) throw Error(ErrorCode::CoincidentMidpoints, "arc midpoints coincide");

  const Complex i(0.0, 1.0);
  const double h = 0.5 * l;
  // half of the counterclockwise angle from m1 to m2, so adjacent arcs give
  // a = -1 + i cot(l/2) for every l
  double turn = std::arg(std::conj(m1) * m2);
  if (turn < 0.0) turn += 2.0 * std::numbers::pi;
  Complex a = i * std::polar(1.0, 0.5 * turn) / std::sin(h);
  Complex c = i * std::sqrt(m1 * m2) * (std::cos(h) / std::sin(h));
  const Complex target = -m1 * std::cos(h);
  if (std::abs(c / a - target) > std::abs(c / a + target)) c = -c;
  return {a, c};
}

MobiusTransform arcs_to_mobius(const ArcPair& pair) {
  const auto [a, c] = arc_pair_entries(pair);
  return MobiusTransform::build(a, c);
}

ArcPair mobius_to_arcs(const MobiusTransform& f) {
  const IsometricArcs arcs = isometric_arcs(f);
  return ArcPair{arcs.plus_arc, arcs.minus_arc, arcs.plus_arc.length};
}

} // namespace rfg

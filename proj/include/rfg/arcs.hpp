#pragma once

// Random-arc model: disjointness of arcs on the unit circle and the
// correspondence between a pair of equal-length arcs and the cyclic group
// generated by the transformation whose isometric arcs they are.

#include <span>
#include <utility>

#include "rfg/arc.hpp"
#include "rfg/mobius.hpp"

namespace rfg {

/// Two arcs of a common length. Compared as an unordered pair.
struct ArcPair {
  Arc first;
  Arc second;
  double common_length = 0.0;

  static ArcPair make(Complex m1, Complex m2, double length);
};

/// Angle at the origin between the midpoints, in [0, pi].
double angular_gap(const Arc& x, const Arc& y);

/// Closed arcs: tangent arcs meet.
bool arcs_disjoint(const Arc& x, const Arc& y);

bool all_disjoint(std::span<const Arc> arcs);

/// Same unordered pair of arcs within `tol` (midpoints and length).
bool same_pair(const ArcPair& x, const ArcPair& y, double tol = kGeometricTolerance);

/// Raw matrix entries (a, c) for the pair, before canonical sign selection:
///   c = i sqrt(m1 m2) cot(l/2),  a = i sqrt(conj(m1) m2) / sin(l/2)
/// with sqrt(conj(m1) m2) = e^{i t/2} for the counterclockwise angle t in
/// [0, 2 pi) from m1 to m2, and the sign of c fixed by c/a = -m1 cos(l/2),
/// which puts C+ on the first arc and C- on the second.
/// Throws DegenerateLength for l outside (0, 2 pi), CoincidentMidpoints.
std::pair<Complex, Complex> arc_pair_entries(const ArcPair& pair);

MobiusTransform arcs_to_mobius(const ArcPair& pair);

/// Isometric arcs of f as (C+ arc, C- arc); arcs_to_mobius inverts this
/// exactly, and the swapped pair gives inverse(f). Throws NoIsometricCircle.
ArcPair mobius_to_arcs(const MobiusTransform& f);

} // namespace rfg

#pragma once

// Circle-preserving Moebius transformations z -> (a z + c) / (conj(c) z + conj(a))
// with |a|^2 - |c|^2 = 1, stored as the pair of matrix entries (a, c).

#include <complex>
#include <string_view>

#include "rfg/arc.hpp"

namespace rfg {

inline constexpr double kConstraintTolerance = 1e-9;
inline constexpr double kGeometricTolerance = 1e-8;
/// |beta| at or below this is classified parabolic.
inline constexpr double kParabolicTolerance = 1e-9;

class MobiusTransform {
public:
  /// Identity transform.
  MobiusTransform() = default;

  /// Normalizes (a, c) to unit determinant and canonical sign (Re a >= 0, ties
  /// broken by Im a >= 0). Throws NotInGroup when |a|^2 - |c|^2 is further
  /// than 1e-6 from 1. The tolerance is relative to |a|^2 once |a| > 1, since
  /// the constraint is a difference of two large squares there.
  static MobiusTransform build(Complex a, Complex c);

  static MobiusTransform identity() { return {}; }

  /// z -> e^{i angle} z.
  static MobiusTransform rotation(double angle);

  Complex a() const { return a_; }
  Complex c() const { return c_; }

  double determinant() const { return std::norm(a_) - std::norm(c_); }

  /// Entrywise equality of canonical representatives.
  friend bool operator==(const MobiusTransform&, const MobiusTransform&) = default;

private:
  MobiusTransform(Complex a, Complex c) : a_(a), c_(c) {}

  Complex a_{1.0, 0.0};
  Complex c_{0.0, 0.0};
};

/// Equal as group elements (up to the sign of the matrix) within `tol` entrywise.
bool approx_equal(const MobiusTransform& f, const MobiusTransform& g, double tol = kGeometricTolerance);

/// Matrix product; compose(f, g)(z) = f(g(z)).
MobiusTransform compose(const MobiusTransform& f, const MobiusTransform& g);
MobiusTransform inverse(const MobiusTransform& f);
/// h f h^-1
MobiusTransform conjugate(const MobiusTransform& h, const MobiusTransform& f);

/// Throws PoleAtInput when conj(c) z + conj(a) vanishes.
Complex apply(const MobiusTransform& f, Complex z);
/// f'(z) = 1 / (conj(c) z + conj(a))^2
Complex derivative(const MobiusTransform& f, Complex z);

enum class Kind { Identity, Elliptic, Parabolic, Hyperbolic };
std::string_view kind_name(Kind kind) noexcept;

struct ClassificationResult {
  Kind kind = Kind::Identity;
  double beta = 0.0;      ///< tr^2 - 4
  double tau = 0.0;       ///< translation length, hyperbolic only
  double trace_abs = 2.0; ///< 2 |Re a|
};

ClassificationResult classify(const MobiusTransform& f);

/// tr^2(f) - 4 = 4 (Re a)^2 - 4.
double beta(const MobiusTransform& f);
/// tr[f, g] - 2 from the matrix commutator f g f^-1 g^-1.
double gamma(const MobiusTransform& f, const MobiusTransform& g);

struct GroupParameters {
  double beta_f = 0.0;
  double beta_g = 0.0;
  double gamma = 0.0;
};

GroupParameters group_parameters(const MobiusTransform& f, const MobiusTransform& g);

struct FixedPoints {
  Complex z_plus;
  Complex z_minus;
  /// Set for hyperbolic f only: |f'(z_plus)| < 1.
  bool attracting_is_plus = false;
  Kind kind = Kind::Hyperbolic;
  /// c = 0: the fixed points are the disk center (z_plus = 0) and infinity.
  bool rotation_center = false;
};

/// Roots of conj(c) z^2 + (conj(a) - a) z - c = 0. For elliptic f the roots
/// are an inverse pair with respect to the circle; for parabolic f they
/// coincide. When c = 0 the result has rotation_center set instead.
/// Throws InvalidArgument for the identity.
FixedPoints fixed_points(const MobiusTransform& f);

struct IsometricArcs {
  Arc plus_arc;  ///< cut by C+ = { |z + conj(a)/conj(c)| = 1/|c| }
  Arc minus_arc; ///< cut by C- = { |z - a/conj(c)| = 1/|c| }
};

/// Throws NoIsometricCircle when c = 0.
IsometricArcs isometric_arcs(const MobiusTransform& f);

/// Geodesic of the disk given by its two ideal endpoints.
struct HyperbolicLine {
  Complex p;
  Complex q;
};

/// Axis of a hyperbolic element, oriented from the repelling to the attracting
/// fixed point. Throws NotHyperbolic.
HyperbolicLine axis(const MobiusTransform& f);

/// (z1 - z3)(z2 - z4) / ((z1 - z2)(z3 - z4)); throws DegeneratePoints when
/// z1 = z2 or z3 = z4.
Complex cross_ratio(Complex z1, Complex z2, Complex z3, Complex z4);

struct ComplexDistance {
  double delta = 0.0; ///< hyperbolic distance, 0 when the lines cross
  double theta = 0.0; ///< crossing angle in [0, pi/2], 0 when disjoint
};

/// Solves sinh^2((delta + i theta)/2) * [z1, w1, z2, w2] = -1 for lines
/// (z1, z2) and (w1, w2). Identical lines give {0, 0}; lines sharing exactly
/// one endpoint throw SharedEndpoint.
ComplexDistance complex_distance(const HyperbolicLine& l1, const HyperbolicLine& l2);

/// sinh^2(delta + i theta), real for lines in the disk.
double sinh2_complex_distance(const ComplexDistance& d);

/// Endpoint interleaving on the circle, decided from arguments alone.
bool endpoints_interleave(const HyperbolicLine& l1, const HyperbolicLine& l2);

/// gamma(f, g) < 0. Throws NotHyperbolic.
bool axes_cross(const MobiusTransform& f, const MobiusTransform& g);

/// [z1, w1, z2, w2] for the fixed points of hyperbolic f (z) and g (w),
/// evaluated from the matrix entries in closed form. Throws NotHyperbolic, or
/// DegeneratePoints when the axes share fixed points.
double fixed_point_cross_ratio(const MobiusTransform& f, const MobiusTransform& g);

} // namespace rfg

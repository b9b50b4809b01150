#include "rfg/mobius.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "rfg/error.hpp"

namespace rfg {

namespace {

constexpr double kBuildTolerance = 1e-6;
constexpr double kIdentityTolerance = 1e-12;
constexpr double kUnitTolerance = 1e-9;

// General 2x2 complex matrix for the commutator, which must not be
// renormalized along the way.
struct Matrix2 {
  Complex m00, m01, m10, m11;

  static Matrix2 of(const MobiusTransform& f) {
    return {f.a(), f.c(), std::conj(f.c()), std::conj(f.a())};
  }

  // Inverse of a unit-determinant matrix.
  Matrix2 adjugate() const { return {m11, -m01, -m10, m00}; }

  Complex trace() const { return m00 + m11; }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
};

double positive_angle(Complex z) {
  double t = std::arg(z);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  return t;
}

} // namespace

Arc Arc::from_angle(double mid_arg, double length) {
  return Arc{std::polar(1.0, mid_arg), length};
}

MobiusTransform MobiusTransform::build(Complex a, Complex c) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(c.real()) ||
      !std::isfinite(c.imag()))
    throw Error(ErrorCode::NotInGroup, "non-finite matrix entry");

  const double abs_a = std::abs(a);
  const double abs_c = std::abs(c);
  const double det = (abs_a - abs_c) * (abs_a + abs_c);
  const double scale = std::max(1.0, abs_a * abs_a);
  if (!(std::abs(det - 1.0) < kBuildTolerance * scale))
    throw Error(ErrorCode::NotInGroup, "|a|^2 - |c|^2 = " + std::to_string(det));

  // Rescale only when det differs from 1 by more than its own rounding error;
  // otherwise the division would perturb Re(a) by O(eps |a|^2).
  if (scale < 1e6 && std::abs(det - 1.0) > 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    const double root = std::sqrt(det);
    a /= root;
    c /= root;
  }
  // Pin |c| to sqrt(|a|^2 - 1); for large |a| this is the only accurate way
  // to restore the constraint since det itself is swamped by rounding.
  const double na = std::abs(a);
  if (na < 1.0) {
    a /= na;
    c = 0.0;
  } else {
    const double target = std::sqrt((na - 1.0) * (na + 1.0));
    const double nc = std::abs(c);
    if (nc > 0.0)
      c *= target / nc;
    else if (target > 0.0)
      a /= na; // c = 0 forces |a| = 1
  }

  if (a.real() < 0.0 || (a.real() == 0.0 && a.imag() < 0.0)) {
    a = -a;
    c = -c;
  }
  // Avoid signed zeros so canonical representatives compare bitwise.
  if (a.real() == 0.0) a.real(0.0);
  if (a.imag() == 0.0) a.imag(0.0);
  if (c.real() == 0.0) c.real(0.0);
  if (c.imag() == 0.0) c.imag(0.0);
  return MobiusTransform(a, c);
}

MobiusTransform MobiusTransform::rotation(double angle) {
  return build(std::polar(1.0, angle / 2.0), 0.0);
}

bool approx_equal(const MobiusTransform& f, const MobiusTransform& g, double tol) {
  auto close = [tol](Complex x, Complex y) { return std::abs(x - y) <= tol; };
  return (close(f.a(), g.a()) && close(f.c(), g.c())) || (close(f.a(), -g.a()) && close(f.c(), -g.c()));
}

MobiusTransform compose(const MobiusTransform& f, const MobiusTransform& g) {
  const Matrix2 p = Matrix2::of(f) * Matrix2::of(g);
  return MobiusTransform::build(p.m00, p.m01);
}

MobiusTransform inverse(const MobiusTransform& f) {
  return MobiusTransform::build(std::conj(f.a()), -f.c());
}

MobiusTransform conjugate(const MobiusTransform& h, const MobiusTransform& f) {
  return compose(compose(h, f), inverse(h));
}

Complex apply(const MobiusTransform& f, Complex z) {
  const Complex den = std::conj(f.c()) * z + std::conj(f.a());
  if (std::abs(den) == 0.0) throw Error(ErrorCode::PoleAtInput, "denominator vanishes");
  return (f.a() * z + f.c()) / den;
}

Complex derivative(const MobiusTransform& f, Complex z) {
  const Complex den = std::conj(f.c()) * z + std::conj(f.a());
  if (std::abs(den) == 0.0) throw Error(ErrorCode::PoleAtInput, "denominator vanishes");
  return 1.0 / (den * den);
}

std::string_view kind_name(Kind kind) noexcept {
  switch (kind) {
  case Kind::Identity: return "identity";
  case Kind::Elliptic: return "elliptic";
  case Kind::Parabolic: return "parabolic";
  case Kind::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

double beta(const MobiusTransform& f) {
  const double x = std::abs(f.a().real());
  return 4.0 * (x - 1.0) * (x + 1.0);
}

ClassificationResult classify(const MobiusTransform& f) {
  ClassificationResult out;
  out.trace_abs = 2.0 * std::abs(f.a().real());
  out.beta = beta(f);
  if (std::abs(f.a() - 1.0) < kIdentityTolerance && std::abs(f.c()) < kIdentityTolerance) {
    out.kind = Kind::Identity;
  } else if (std::abs(out.beta) <= kParabolicTolerance) {
    out.kind = Kind::Parabolic;
  } else if (out.beta < 0.0) {
    out.kind = Kind::Elliptic;
  } else {
    out.kind = Kind::Hyperbolic;
    // arccosh(1 + beta/2) without the cancellation near beta = 0
    out.tau = 2.0 * std::asinh(std::sqrt(out.beta) / 2.0);
  }
  return out;
}

double gamma(const MobiusTransform& f, const MobiusTransform& g) {
  const Matrix2 a = Matrix2::of(f);
  const Matrix2 b = Matrix2::of(g);
  const Matrix2 k = a * b * a.adjugate() * b.adjugate();
  return k.trace().real() - 2.0;
}

GroupParameters group_parameters(const MobiusTransform& f, const MobiusTransform& g) {
  return {beta(f), beta(g), gamma(f, g)};
}

FixedPoints fixed_points(const MobiusTransform& f) {
  const ClassificationResult cls = classify(f);
  if (cls.kind == Kind::Identity)
    throw Error(ErrorCode::InvalidArgument, "the identity fixes every point");

  FixedPoints out;
  out.kind = cls.kind;
  if (std::abs(f.c()) == 0.0) {
    out.rotation_center = true;
    out.z_plus = 0.0;
    out.z_minus = Complex(std::numeric_limits<double>::infinity(), 0.0);
    return out;
  }

  const double re = f.a().real();
  const Complex im_part(0.0, f.a().imag());
  const Complex cbar = std::conj(f.c());
  Complex root = 0.0;
  if (cls.kind == Kind::Hyperbolic)
    root = std::sqrt((re - 1.0) * (re + 1.0));
  else if (cls.kind == Kind::Elliptic)
    root = Complex(0.0, std::sqrt((1.0 - re) * (1.0 + re)));
  out.z_plus = (im_part + root) / cbar;
  out.z_minus = (im_part - root) / cbar;
  if (cls.kind == Kind::Hyperbolic)
    out.attracting_is_plus = std::abs(derivative(f, out.z_plus)) < 1.0;
  return out;
}

IsometricArcs isometric_arcs(const MobiusTransform& f) {
  const Complex a = f.a();
  const Complex c = f.c();
  if (std::abs(c) == 0.0) throw Error(ErrorCode::NoIsometricCircle, "c = 0");
  // sin(length/2) = 1/|a|, cos(length/2) = |c|/|a|
  const double length = 2.0 * std::atan2(1.0, std::abs(c));
  const Complex plus_center = -std::conj(a) / std::conj(c);
  const Complex minus_center = a / std::conj(c);
  return {Arc{plus_center / std::abs(plus_center), length},
          Arc{minus_center / std::abs(minus_center), length}};
}

HyperbolicLine axis(const MobiusTransform& f) {
  const FixedPoints fp = fixed_points(f);
  if (fp.kind != Kind::Hyperbolic) throw Error(ErrorCode::NotHyperbolic, "axis requires a hyperbolic element");
  return fp.attracting_is_plus ? HyperbolicLine{fp.z_minus, fp.z_plus} : HyperbolicLine{fp.z_plus, fp.z_minus};
}

Complex cross_ratio(Complex z1, Complex z2, Complex z3, Complex z4) {
  const Complex d12 = z1 - z2;
  const Complex d34 = z3 - z4;
  if (std::abs(d12) < 1e-14 || std::abs(d34) < 1e-14)
    throw Error(ErrorCode::DegeneratePoints, "cross ratio denominator vanishes");
  return (z1 - z3) * (z2 - z4) / (d12 * d34);
}

ComplexDistance complex_distance(const HyperbolicLine& l1, const HyperbolicLine& l2) {
  for (Complex z : {l1.p, l1.q, l2.p, l2.q})
    if (std::abs(std::abs(z) - 1.0) > kUnitTolerance)
      throw Error(ErrorCode::InvalidArgument, "line endpoints must lie on the unit circle");
  if (std::abs(l1.p - l1.q) < 1e-14 || std::abs(l2.p - l2.q) < 1e-14)
    throw Error(ErrorCode::DegeneratePoints, "line endpoints coincide");

  auto same = [](Complex x, Complex y) { return std::abs(x - y) < 1e-12; };
  const bool pp = same(l1.p, l2.p), pq = same(l1.p, l2.q), qp = same(l1.q, l2.p), qq = same(l1.q, l2.q);
  if ((pp && qq) || (pq && qp)) return {};
  if (pp || pq || qp || qq) throw Error(ErrorCode::SharedEndpoint, "lines share an ideal endpoint");

  const double x = cross_ratio(l1.p, l2.p, l1.q, l2.q).real();
  ComplexDistance out;
  if (x < 0.0) {
    out.delta = 2.0 * std::asinh(std::sqrt(-1.0 / x));
  } else if (x < 1.0) {
    // opposite orientation: sinh^2((delta + i pi)/2) = -cosh^2(delta/2)
    out.delta = 2.0 * std::acosh(1.0 / std::sqrt(x));
  } else {
    const double theta = 2.0 * std::asin(std::min(1.0, 1.0 / std::sqrt(x)));
    out.theta = std::min(theta, std::numbers::pi - theta);
  }
  return out;
}

double sinh2_complex_distance(const ComplexDistance& d) {
  // sinh(delta + i theta) = sinh(delta) cos(theta) + i cosh(delta) sin(theta),
  // and one of delta, theta is zero.
  if (d.theta > 0.0) {
    const double s = std::sin(d.theta);
    return -s * s;
  }
  const double s = std::sinh(d.delta);
  return s * s;
}

bool endpoints_interleave(const HyperbolicLine& l1, const HyperbolicLine& l2) {
  const Complex base = std::conj(l1.p);
  const double tq = positive_angle(l1.q * base);
  const double tr = positive_angle(l2.p * base);
  const double ts = positive_angle(l2.q * base);
  return (tr < tq) != (ts < tq);
}

bool axes_cross(const MobiusTransform& f, const MobiusTransform& g) {
  if (classify(f).kind != Kind::Hyperbolic || classify(g).kind != Kind::Hyperbolic)
    throw Error(ErrorCode::NotHyperbolic, "axes_cross requires hyperbolic elements");
  return gamma(f, g) < 0.0;
}

double fixed_point_cross_ratio(const MobiusTransform& f, const MobiusTransform& g) {
  if (classify(f).kind != Kind::Hyperbolic || classify(g).kind != Kind::Hyperbolic)
    throw Error(ErrorCode::NotHyperbolic, "fixed_point_cross_ratio requires hyperbolic elements");
  // Canonical sign gives Re a > 1 for hyperbolic elements.
  const double ra = f.a().real();
  const double rb = g.a().real();
  const double sa = std::sqrt((ra - 1.0) * (ra + 1.0));
  const double sb = std::sqrt((rb - 1.0) * (rb + 1.0));
  const Complex u(sa, f.a().imag());
  const Complex v(sb, g.a().imag());
  const double den = (u * std::conj(v)).real() - (f.c() * std::conj(g.c())).real();
  if (std::abs(den) <= 1e-12 * std::abs(f.c()) * std::abs(g.c()))
    throw Error(ErrorCode::DegeneratePoints, "axes share their fixed points");
  return 2.0 * sa * sb / den;
}

} // namespace rfg

#include "rfg/sampling.hpp"

#include <cmath>
#include <numbers>

#include "rfg/error.hpp"

namespace rfg {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

MobiusTransform SamplerDraw::to_mobius() const {
  const double h = 0.5 * arc_angle;
  const double s = std::sin(h);
  return MobiusTransform::build(std::polar(1.0 / s, arg_a), std::polar(std::cos(h) / s, arg_c));
}

SamplerDraw draw_from_uniforms(double u_arg_a, double u_arg_c, double u_len) {
  if (!(u_len > 0.0 && u_len <= 1.0)) throw Error(ErrorCode::DomainError, "u_len must lie in (0, 1]");
  return SamplerDraw{kTwoPi * u_arg_a, kTwoPi * u_arg_c, kPi * u_len};
}

SamplerDraw sample_draw(Stream& stream) {
  const double u1 = stream.uniform();
  const double u2 = stream.uniform();
  const double u3 = stream.uniform_positive();
  return draw_from_uniforms(u1, u2, u3);
}

MobiusTransform sample_mobius(Stream& stream) {
  return sample_draw(stream).to_mobius();
}

MobiusTransform DiskParametrization::to_mobius() const {
  const double k = 1.0 / std::sqrt((1.0 - std::abs(w)) * (1.0 + std::abs(w)));
  return MobiusTransform::build(zeta * k, -zeta * w * k);
}

DiskParametrization disk_form_from_uniforms(double u_zeta, double u_arg_w, double v) {
  if (!(v > 0.0 && v <= 1.0)) throw Error(ErrorCode::DomainError, "v must lie in (0, 1]");
  const double r = std::cos(0.5 * kPi * v);
  return DiskParametrization{std::polar(1.0, kTwoPi * u_zeta), std::polar(r, kTwoPi * u_arg_w)};
}

DiskParametrization sample_mobius_disk_form(Stream& stream) {
  const double u1 = stream.uniform();
  const double u2 = stream.uniform();
  const double v = stream.uniform_positive();
  return disk_form_from_uniforms(u1, u2, v);
}

MobiusTransform sample_hyperbolic(Stream& stream) {
  for (;;) {
    MobiusTransform f = sample_mobius(stream);
    if (classify(f).kind == Kind::Hyperbolic) return f;
  }
}

ArcPair parabolic_arcs_from_uniforms(double u_mid, double u_len) {
  if (!(u_len > 0.0 && u_len < 1.0)) throw Error(ErrorCode::DomainError, "u_len must lie in (0, 1)");
  const double len = kTwoPi * u_len;
  const Complex m1 = std::polar(1.0, kTwoPi * u_mid);
  return ArcPair::make(m1, m1 * std::polar(1.0, len), len);
}

MobiusTransform sample_parabolic(Stream& stream) {
  const double u_mid = stream.uniform();
  double u_len = stream.uniform_positive();
  while (u_len == 0.5) u_len = stream.uniform_positive(); // l = pi gives c = 0
  return arcs_to_mobius(parabolic_arcs_from_uniforms(u_mid, u_len));
}

Arc sample_arc(Stream& stream, ArcSupport support) {
  const double mid = kTwoPi * stream.uniform();
  const double span = support == ArcSupport::HalfTurn ? kPi : kTwoPi;
  return Arc::from_angle(mid, span * stream.uniform());
}

} // namespace rfg

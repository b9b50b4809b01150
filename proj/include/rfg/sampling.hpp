#pragma once

// Samplers for the rotation-invariant measure on circle-preserving Moebius
// transformations: arg a and arg c uniform on the circle, and the isometric
// arc angle 2 arcsin(1/|a|) uniform on [0, pi].

#include "rfg/arcs.hpp"
#include "rfg/mobius.hpp"
#include "rfg/rng.hpp"

namespace rfg {

struct SamplerDraw {
  double arg_a = 0.0;     ///< [0, 2 pi)
  double arg_c = 0.0;     ///< [0, 2 pi)
  double arc_angle = 0.0; ///< (0, pi]; |a| = 1 / sin(arc_angle / 2)

  MobiusTransform to_mobius() const;
};

/// Inverse-transform map from three uniforms; u_len = 0 (|a| infinite) is
/// rejected with DomainError.
SamplerDraw draw_from_uniforms(double u_arg_a, double u_arg_c, double u_len);

SamplerDraw sample_draw(Stream& stream);
MobiusTransform sample_mobius(Stream& stream);

/// z -> zeta^2 (z - w) / (1 - conj(w) z).
struct DiskParametrization {
  Complex zeta{1.0, 0.0};
  Complex w{0.0, 0.0};

  MobiusTransform to_mobius() const;
};

/// |w| = cos(v pi / 2); v = 0 (|w| = 1) is rejected with DomainError.
DiskParametrization disk_form_from_uniforms(double u_zeta, double u_arg_w, double v);
DiskParametrization sample_mobius_disk_form(Stream& stream);

/// sample_mobius conditioned on beta > 0 by rejection.
MobiusTransform sample_hyperbolic(Stream& stream);

/// Adjacent arcs m2 = m1 e^{i l}, l uniform on (0, 2 pi).
ArcPair parabolic_arcs_from_uniforms(double u_mid, double u_len);
MobiusTransform sample_parabolic(Stream& stream);

enum class ArcSupport { HalfTurn, FullTurn };

/// Midpoint uniform on the circle; length uniform on [0, pi] (HalfTurn) or
/// [0, 2 pi] (FullTurn).
Arc sample_arc(Stream& stream, ArcSupport support);

} // namespace rfg

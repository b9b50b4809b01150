#pragma once
// Discreteness certificates and refutations for finitely generated groups.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rfg/mobius.hpp"

namespace rfg {

enum class VerdictStatus {
  DiscreteFreeByPingPong,
  DiscreteByPingPongWithTangency,
  NotDiscreteByJorgensen,
  AlmostSurelyNotDiscrete,
  Inconclusive,
};

std::string_view verdict_status_name(VerdictStatus status) noexcept;

struct ArcRef {
  std::size_t generator = 0;
  bool plus = true; ///< C+ arc, otherwise C-
};

struct Witness {
  /// Pairs of arcs that meet (ping-pong failures) or are tangent.
  std::vector<std::pair<ArcRef, ArcRef>> overlapping;
  std::vector<std::pair<ArcRef, ArcRef>> tangent;
  std::optional<double> jorgensen_value;
  std::optional<double> gamma;
  bool elementary = false; ///< generators share a fixed point
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::optional<Witness> witness;
};

/// Arcs closer than this to touching count as tangent.
inline constexpr double kTangencyTolerance = 1e-9;

/// Ping-pong on isometric arcs. Every generator must have c != 0
/// (NoIsometricCircle otherwise). The witness lists the overlapping pairs.
Verdict ping_pong(std::span<const MobiusTransform> generators);

/// |beta(f)| + |gamma(f, g)|.
double jorgensen_value(const MobiusTransform& f, const MobiusTransform& g);
/// The inequality fails for the pair in either order:
/// min(jorgensen_value(f, g), jorgensen_value(g, f)) < 1.
bool jorgensen_fails(const MobiusTransform& f, const MobiusTransform& g);
/// f and g share a fixed point within 1e-8 (elementary pair).
bool shares_fixed_point(const MobiusTransform& f, const MobiusTransform& g);
/// gamma(f, g) in [-4, 0].
bool gamma_interval_flag(const MobiusTransform& f, const MobiusTransform& g);

/// Ping-pong certificate, then Jorgensen refutation, then the gamma interval
/// flag, else Inconclusive. Rotation generators skip the ping-pong step, and
/// elementary pairs are never refuted.
Verdict combined_verdict(const MobiusTransform& f, const MobiusTransform& g);

} // namespace rfg

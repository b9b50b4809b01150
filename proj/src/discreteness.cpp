#include "rfg/discreteness.hpp"

#include <cmath>

#include "rfg/arcs.hpp"
#include "rfg/error.hpp"

namespace rfg {

std::string_view verdict_status_name(VerdictStatus status) noexcept {
  switch (status) {
  case VerdictStatus::DiscreteFreeByPingPong: return "DiscreteFreeByPingPong";
  case VerdictStatus::DiscreteByPingPongWithTangency: return "DiscreteByPingPongWithTangency";
  case VerdictStatus::NotDiscreteByJorgensen: return "NotDiscreteByJorgensen";
  case VerdictStatus::AlmostSurelyNotDiscrete: return "AlmostSurelyNotDiscrete";
  case VerdictStatus::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

Verdict ping_pong(std::span<const MobiusTransform> generators) {
  struct Entry {
    Arc arc;
    ArcRef ref;
  };
  std::vector<Entry> arcs;
  std::vector<bool> parabolic;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const IsometricArcs iso = isometric_arcs(generators[i]);
    arcs.push_back({iso.plus_arc, {i, true}});
    arcs.push_back({iso.minus_arc, {i, false}});
    parabolic.push_back(classify(generators[i]).kind == Kind::Parabolic);
  }

  Witness witness;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const double slack =
          angular_gap(arcs[i].arc, arcs[j].arc) - (arcs[i].arc.length + arcs[j].arc.length) / 2.0;
      if (slack > kTangencyTolerance) continue;
      const std::size_t gi = arcs[i].ref.generator;
      if (std::abs(slack) <= kTangencyTolerance && gi == arcs[j].ref.generator && parabolic[gi])
        witness.tangent.emplace_back(arcs[i].ref, arcs[j].ref);
      else
        witness.overlapping.emplace_back(arcs[i].ref, arcs[j].ref);
    }
  }

  Verdict out;
  if (!witness.overlapping.empty())
    out.status = VerdictStatus::Inconclusive;
  else if (!witness.tangent.empty())
    out.status = VerdictStatus::DiscreteByPingPongWithTangency;
  else
    out.status = VerdictStatus::DiscreteFreeByPingPong;
  out.witness = std::move(witness);
  return out;
}

double jorgensen_value(const MobiusTransform& f, const MobiusTransform& g) {
  return std::abs(beta(f)) + std::abs(gamma(f, g));
}

bool jorgensen_fails(const MobiusTransform& f, const MobiusTransform& g) {
  return std::min(jorgensen_value(f, g), jorgensen_value(g, f)) < 1.0;
}

bool shares_fixed_point(const MobiusTransform& f, const MobiusTransform& g) {
  if (classify(f).kind == Kind::Identity || classify(g).kind == Kind::Identity) return true;
  const FixedPoints pf = fixed_points(f);
  const FixedPoints pg = fixed_points(g);
  auto same = [](Complex x, Complex y) {
    if (std::isinf(x.real()) || std::isinf(y.real())) return std::isinf(x.real()) && std::isinf(y.real());
    return std::abs(x - y) < 1e-8;
  };
  for (Complex x : {pf.z_plus, pf.z_minus})
    for (Complex y : {pg.z_plus, pg.z_minus})
      if (same(x, y)) return true;
  return false;
}

bool gamma_interval_flag(const MobiusTransform& f, const MobiusTransform& g) {
  const double value = gamma(f, g);
  return value >= -4.0 && value <= 0.0;
}

Verdict combined_verdict(const MobiusTransform& f, const MobiusTransform& g) {
  std::optional<Verdict> pp;
  if (std::abs(f.c()) > 0.0 && std::abs(g.c()) > 0.0) {
    const MobiusTransform gens[] = {f, g};
    pp = ping_pong(gens);
    if (pp->status != VerdictStatus::Inconclusive) return *pp;
  }

  Witness witness = pp ? *pp->witness : Witness{};
  const double value = std::min(jorgensen_value(f, g), jorgensen_value(g, f));
  witness.jorgensen_value = value;
  witness.gamma = gamma(f, g);
  witness.elementary = shares_fixed_point(f, g);

  Verdict out;
  // both refutations assume a non-elementary group
  if (witness.elementary)
    out.status = VerdictStatus::Inconclusive;
  else if (value < 1.0)
    out.status = VerdictStatus::NotDiscreteByJorgensen;
  else if (*witness.gamma >= -4.0 && *witness.gamma <= 0.0)
    out.status = VerdictStatus::AlmostSurelyNotDiscrete;
  else
    out.status = VerdictStatus::Inconclusive;
  out.witness = std::move(witness);
  return out;
}

} // namespace rfg

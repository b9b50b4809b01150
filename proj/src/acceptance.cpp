#include "rfg/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "rfg/analytic.hpp"
#include "rfg/arcs.hpp"
#include "rfg/discreteness.hpp"
#include "rfg/error.hpp"
#include "rfg/experiments.hpp"
#include "rfg/quadrature.hpp"
#include "rfg/sampling.hpp"

namespace rfg::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

struct Context {
  Level level;
  std::uint64_t seed;

  std::uint64_t scaled(std::uint64_t n) const { return level == Level::Full ? n : std::max<std::uint64_t>(n / 10, 1000); }

  mc::RunConfig config(std::uint64_t n) const { return {scaled(n), seed, 16, 0}; }
};

Check make_check(std::string label, double value, double target, double tolerance, std::string detail = {}) {
  Check c{std::move(label), value, target, tolerance, std::isfinite(value) && std::abs(value - target) <= tolerance,
          std::move(detail)};
  return c;
}

// Event frequency from the registry against the stated band. The quick level
// keeps the band honest for its smaller n by widening to 8 standard errors.
Check event_check(const Context& ctx, const std::string& experiment, const std::string& measurement,
                  std::uint64_t n, double target, double tolerance) {
  const mc::ExperimentResult r = mc::run(experiment, ctx.config(n));
  const Measurement& m = r.measurement(measurement);
  double band = tolerance;
  if (ctx.level == Level::Quick) {
    const double se = m.kind == MeasurementKind::Event
                          ? std::sqrt(target * (1.0 - target) / static_cast<double>(m.n))
                          : m.std_err;
    band = std::max(band, 8.0 * se);
  }
  return make_check(measurement + " (n=" + std::to_string(m.n) + ")", m.p_hat, target, band, m.note);
}

Check ks_check(const Context& ctx, const std::string& experiment) {
  const mc::ExperimentResult r = mc::run(experiment, ctx.config(mc::kKsSampleCap * 10));
  const KsResult& ks = *r.ks;
  const double scaled = ks.statistic * std::sqrt(static_cast<double>(ks.n));
  Check c = make_check(experiment + " D*sqrt(n) (n=" + std::to_string(ks.n) + ")", scaled, 0.0, ks.threshold);
  c.pass = ks.pass;
  return c;
}

double rel_diff(double x, double y) { return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}); }

bool same_up_to_sign(const MobiusTransform& f, const MobiusTransform& g, double tol) {
  auto close = [tol](Complex x, Complex y) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(x)); };
  return (close(f.a(), g.a()) && close(f.c(), g.c())) || (close(f.a(), -g.a()) && close(f.c(), -g.c()));
}

std::vector<Check> criterion_1(const Context& ctx) {
  return {event_check(ctx, "isometric-disjoint", "isometric-disjoint", 1'000'000, 0.5, 0.004),
          event_check(ctx, "cyclic-discrete", "cyclic-discrete", 1'000'000, 0.5, 0.004)};
}

std::vector<Check> criterion_2(const Context& ctx) {
  std::vector<Check> out;
  out.push_back(event_check(ctx, "axes-cross", "axes-cross", 1'000'000, 0.4296, 0.003));
  const double quadrature = analytic::axes_cross_probability_quadrature();
  out.push_back(make_check("axes-cross-quadrature", quadrature, 0.429, 0.002));
  out.push_back(make_check("|axes-cross - quadrature|", std::abs(out[0].value - quadrature), 0.0, 0.003));
  return out;
}

std::vector<Check> criterion_3(const Context& ctx) {
  return {event_check(ctx, "gamma-below-minus4", "gamma-below-minus4", 1'000'000, 0.2668, 0.003),
          event_check(ctx, "gamma-in-minus4-0", "gamma-in-minus4-0", 1'000'000, 0.1624, 0.003),
          event_check(ctx, "jorgensen-fail", "jorgensen-fail", 1'000'000, 0.111, 0.010)};
}

std::vector<Check> criterion_4(const Context& ctx) {
  return {event_check(ctx, "chords-cross", "chords-cross", 1'000'000, 1.0 / 3.0, 0.004)};
}

std::vector<Check> criterion_5(const Context& ctx) {
  return {event_check(ctx, "arcs-disjoint-half", "arcs-disjoint-half", 1'000'000, 0.5, 0.004),
          event_check(ctx, "arcs-disjoint-full", "arcs-disjoint-full", 1'000'000, 1.0 / 6.0, 0.004)};
}

std::vector<Check> criterion_6(const Context& ctx) {
  return {event_check(ctx, "two-pairs-all-disjoint", "two-pairs-all-disjoint", 1'000'000, 0.05, 0.002),
          event_check(ctx, "two-pairs-conditional", "two-pairs-conditional", 1'000'000, 0.2, 0.004),
          event_check(ctx, "three-pairs-all-disjoint", "three-pairs-all-disjoint", 10'000'000, 0.003, 0.0005),
          event_check(ctx, "equal-length-pairs-2", "equal-length-pairs-2", 1'000'000, 0.125, 0.003),
          event_check(ctx, "equal-length-pairs-3", "equal-length-pairs-3", 1'000'000, 0.045, 0.002)};
}

std::vector<Check> criterion_7(const Context& ctx) {
  std::vector<Check> out;
  for (const char* name : {"ks-beta", "ks-tau", "ks-abs-a", "ks-f0", "ks-half-angle"})
    out.push_back(ks_check(ctx, name));
  return out;
}

std::vector<Check> criterion_8(const Context& ctx) {
  return {event_check(ctx, "mean-tau", "mean-tau", 1'000'000, 4.0 * std::numbers::ln2, 0.02),
          event_check(ctx, "mean-f0", "mean-f0", 1'000'000, 2.0 / kPi, 0.002)};
}

std::vector<Check> criterion_9(const Context& ctx) {
  std::vector<Check> out;
  out.push_back(make_check("prob_axis_meets_disk(0.678)", analytic::prob_axis_meets_disk(0.678), 0.5, 0.001));
  out.push_back(
      make_check("prob_axis_meets_disk(2.24419)", analytic::prob_axis_meets_disk(2.24419), 0.95, 0.001));
  const mc::ExperimentResult r = mc::run("axis-meets-disk", ctx.config(1'000'000));
  for (const Measurement& m : r.measurements) {
    double band = 0.004;
    if (ctx.level == Level::Quick) band = std::max(band, 8.0 * std::sqrt(0.25 / static_cast<double>(m.n)));
    out.push_back(make_check(m.name + " (n=" + std::to_string(m.n) + ")", m.p_hat, *m.target, band));
  }
  return out;
}

std::vector<Check> criterion_10(const Context& ctx) {
  return {event_check(ctx, "pingpong-hyperbolic", "pingpong-hyperbolic", 1'000'000, 0.2, 0.004),
          event_check(ctx, "pingpong-all", "pingpong-all", 1'000'000, 0.05, 0.002),
          event_check(ctx, "pingpong-parabolic", "pingpong-parabolic", 1'000'000, 1.0 / 6.0, 0.004)};
}

std::vector<Check> criterion_11(const Context&) {
  std::vector<Check> out;
  std::vector<std::string> names{"abs-a", "f0",  "ratio-x", "half-angle", "half-angle-sum", "trace",
                                 "beta",  "w",   "tau",     "min-gap",    "crossing-s",     "uniform-circle",
                                 "uniform-circle-sum"};
  for (int m = 2; m <= 7; ++m) names.push_back("irwin-hall-" + std::to_string(m));
  for (const std::string& name : names)
    out.push_back(make_check("integral of " + name, analytic::total_mass(analytic::density(name)), 1.0, 1e-6));

  // |tr| -> beta = s^2 - 4 on beta > 0 (the s > 2 branch of the trace density)
  double worst_beta = 0.0;
  double worst_tau = 0.0;
  for (int i = 1; i <= 2000; ++i) {
    const double b = std::pow(10.0, -6.0 + 10.0 * i / 2000.0);
    const double s = std::sqrt(b + 4.0);
    worst_beta = std::max(worst_beta, rel_diff(analytic::pdf_trace_arccosh(s) / (2.0 * s), analytic::pdf_beta(b)));
    // beta -> tau = arccosh(1 + beta/2), conditional on beta > 0 (mass 1/2)
    const double tau = std::pow(10.0, -4.0 + 6.0 * i / 2000.0);
    const double bt = 4.0 * std::sinh(tau / 2.0) * std::sinh(tau / 2.0);
    worst_tau = std::max(worst_tau, rel_diff(2.0 * analytic::pdf_beta(bt) * 2.0 * std::sinh(tau),
                                             analytic::pdf_translation_length(tau)));
  }
  out.push_back(make_check("trace -> beta pushforward, max relative error", worst_beta, 0.0, 1e-8));
  out.push_back(make_check("beta -> tau pushforward, max relative error", worst_tau, 0.0, 1e-8));

  out.push_back(make_check("dilog(1) - pi^2/6", analytic::dilog(1.0) - kPi * kPi / 6.0, 0.0, 1e-12));

  double worst_ih = 0.0;
  for (int i = 0; i <= 3000; ++i) {
    const double x = 3.0 * i / 3000.0;
    double display = 0.0;
    if (x <= 1.0)
      display = x * x / 2.0;
    else if (x <= 2.0)
      display = (-2.0 * x * x + 6.0 * x - 3.0) / 2.0;
    else
      display = (x * x - 6.0 * x + 9.0) / 2.0;
    worst_ih = std::max(worst_ih, std::abs(analytic::irwin_hall_pdf(3, x) - display));
  }
  out.push_back(make_check("Irwin-Hall m=3 vs piecewise display, max error", worst_ih, 0.0, 1e-12));
  return out;
}

std::vector<Check> criterion_12(const Context& ctx) {
  std::vector<Check> out;
  Stream s(ctx.seed, 1000);

  const int round_trips = ctx.level == Level::Full ? 100'000 : 10'000;
  int bad = 0;
  for (int i = 0; i < round_trips; ++i) {
    const MobiusTransform f = sample_mobius(s);
    const MobiusTransform g = arcs_to_mobius(mobius_to_arcs(f));
    if (!same_up_to_sign(f, g, 1e-8) && !same_up_to_sign(inverse(f), g, 1e-8)) ++bad;
  }
  out.push_back(make_check("arcs <-> transform round trips off by more than 1e-8 (of " +
                               std::to_string(round_trips) + ")",
                           bad, 0.0, 0.0));

  // 4 gamma = beta(f) beta(g) sinh^2(delta + i theta)
  double worst_identity = 0.0;
  for (int i = 0; i < 10'000; ++i) {
    const MobiusTransform f = sample_hyperbolic(s);
    const MobiusTransform g = sample_hyperbolic(s);
    const double lhs = 4.0 * gamma(f, g);
    const double rhs = beta(f) * beta(g) * sinh2_complex_distance(complex_distance(axis(f), axis(g)));
    worst_identity = std::max(worst_identity, rel_diff(lhs, rhs));
  }
  out.push_back(make_check("gamma vs complex distance, max relative error", worst_identity, 0.0, 1e-6));

  double worst_params = 0.0;
  int verdict_changes = 0;
  for (int i = 0; i < 10'000; ++i) {
    const MobiusTransform f = sample_mobius(s);
    const MobiusTransform g = sample_mobius(s);
    // rounding in h f h^-1 grows like |a(h)|^8, so keep h moderate
    MobiusTransform h = sample_mobius(s);
    while (std::abs(h.a()) > 4.0) h = sample_mobius(s);
    const MobiusTransform cf = conjugate(h, f);
    const MobiusTransform cg = conjugate(h, g);
    worst_params = std::max({worst_params, rel_diff(beta(f), beta(cf)), rel_diff(beta(g), beta(cg)),
                             rel_diff(gamma(f, g), gamma(cf, cg))});
    // verdicts only see beta, gamma and the arcs up to rotation
    const MobiusTransform r = MobiusTransform::rotation(2.0 * kPi * s.uniform());
    if (combined_verdict(f, g).status != combined_verdict(conjugate(r, f), conjugate(r, g)).status)
      ++verdict_changes;
  }
  out.push_back(make_check("conjugation invariance of beta, gamma (|a(h)| <= 4), max relative error", worst_params, 0.0, 1e-6));
  out.push_back(make_check("verdict changes under rotation conjugation", verdict_changes, 0.0, 0.0));

  // identical results for any worker count
  for (const char* name : {"axes-cross", "mean-tau", "gamma-hyperbolic-histogram"}) {
    std::string reference;
    int mismatches = 0;
    for (unsigned workers : {1u, 2u, 3u, 8u}) {
      const mc::RunConfig cfg{100'000, ctx.seed, 12, workers};
      const mc::ExperimentResult r = mc::run(name, cfg);
      std::string text = mc::to_json(r) + (r.histogram ? mc::histogram_csv(*r.histogram) : "");
      if (reference.empty())
        reference = std::move(text);
      else if (text != reference)
        ++mismatches;
    }
    out.push_back(make_check(std::string(name) + " output differences across worker counts", mismatches, 0.0, 0.0));
  }
  return out;
}

} // namespace

bool CriterionResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string criterion_title(int id) {
  switch (id) {
  case 1: return "isometric circles disjoint / cyclic group discrete = 1/2";
  case 2: return "axes cross: Monte Carlo vs nested quadrature";
  case 3: return "gamma intervals and Jorgensen failures for hyperbolic pairs";
  case 4: return "random chords cross = 1/3";
  case 5: return "random arcs disjoint = 1/2 and 1/6";
  case 6: return "arc pair disjointness: 1/20, 1/5, 3/1000, equal lengths";
  case 7: return "Kolmogorov-Smirnov fits of beta, tau, |a|, |f(0)|, half angle";
  case 8: return "mean translation length and mean |f(0)|";
  case 9: return "axis meets hyperbolic disk";
  case 10: return "ping-pong certificate frequencies";
  case 11: return "analytic self-consistency";
  case 12: return "structural properties and reproducibility";
  default: throw Error(ErrorCode::InvalidArgument, "criterion must be in 1.." + std::to_string(kCriterionCount));
  }
}

CriterionResult run_criterion(int id, Level level, std::uint64_t seed) {
  using Fn = std::vector<Check> (*)(const Context&);
  static constexpr Fn table[] = {criterion_1, criterion_2, criterion_3,  criterion_4,  criterion_5,  criterion_6,
                                 criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12};
  CriterionResult out;
  out.id = id;
  out.title = criterion_title(id);
  const auto start = std::chrono::steady_clock::now();
  out.checks = table[id - 1](Context{level, seed});
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<CriterionResult> run_all(Level level, const std::function<void(const CriterionResult&)>& progress,
                                     std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, level, seed));
    if (progress) progress(out.back());
  }
  return out;
}

std::string format(const CriterionResult& r) {
  std::string text;
  char line[512];
  for (const Check& c : r.checks) {
    std::snprintf(line, sizeof line, "    %-4s %-60s %.8g (target %.8g +/- %.3g)%s%s\n", c.pass ? "ok" : "FAIL",
                  c.label.c_str(), c.value, c.target, c.tolerance, c.detail.empty() ? "" : "; ", c.detail.c_str());
    text += line;
  }
  std::snprintf(line, sizeof line, "criterion %2d %s: %s (%.1f s)\n", r.id, r.pass() ? "PASS" : "FAIL",
                r.title.c_str(), r.seconds);
  text += line;
  return text;
}

} // namespace rfg::acceptance

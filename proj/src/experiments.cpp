#include "rfg/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "rfg/analytic.hpp"
#include "rfg/arcs.hpp"
#include "rfg/discreteness.hpp"
#include "rfg/error.hpp"
#include "rfg/sampling.hpp"
#include "rfg/serialize.hpp"

namespace rfg::mc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Per-stream accumulator. Everything in it merges exactly, so the merged
// tally is independent of how streams were scheduled.
struct Tally {
  std::vector<std::uint64_t> counts;
  std::vector<FixedSum> sums;
  std::vector<double> samples;
  std::optional<Histogram> hist;

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    for (std::size_t i = 0; i < sums.size(); ++i) sums[i].merge(other.sums[i]);
    samples.insert(samples.end(), other.samples.begin(), other.samples.end());
    if (hist) hist->merge(*other.hist);
  }
};

struct Spec {
  ExperimentInfo info;
  std::size_t counters = 0;
  std::size_t sums = 0;
  std::optional<Histogram> hist;
  /// Caps the number of trials (goodness-of-fit experiments).
  std::uint64_t max_n = 0;
  /// Runs `count` trials on one stream.
  std::function<void(Stream&, std::uint64_t, Tally&)> body;
  std::function<void(const Tally&, std::uint64_t, ExperimentResult&)> finish;
};

double event_band(double target, std::uint64_t n) {
  return 8.0 * std::sqrt(target * (1.0 - target) / static_cast<double>(n));
}

Measurement checked_event(std::string name, std::uint64_t hits, std::uint64_t n, double target, double floor,
                          std::string ref) {
  Measurement m = event_estimate(std::move(name), hits, n);
  assert_target(m, target, std::max(floor, event_band(target, n)), std::move(ref));
  return m;
}

Measurement checked_mean(std::string name, const FixedSum& sum, const FixedSum& sum_sq, std::uint64_t n,
                         double target, double floor, std::string ref) {
  Measurement m = mean_estimate(std::move(name), sum.value(), sum_sq.value(), n);
  assert_target(m, target, std::max(floor, 8.0 * m.std_err), std::move(ref));
  return m;
}

Measurement reported(Measurement m, std::optional<double> reference, std::string ref, std::string note) {
  m.asserted = false;
  m.pass = true;
  m.target = reference;
  m.target_ref = std::move(ref);
  m.note = std::move(note);
  if (reference && m.std_err > 0.0) m.sigma_distance = (m.p_hat - *reference) / m.std_err;
  return m;
}

// Half the angle subtended at 0 by the fixed points of hyperbolic f.
double half_angle(const MobiusTransform& f) {
  const FixedPoints fp = fixed_points(f);
  return std::abs(std::arg(fp.z_plus * std::conj(fp.z_minus))) / 2.0;
}

Arc uniform_arc(Stream& s, double length) { return Arc::from_angle(kTwoPi * s.uniform(), length); }

double uniform_length(Stream& s) { return kPi * s.uniform(); }

// n pairs of arcs; pair i has its own length unless `common` is set.
bool pairs_all_disjoint(Stream& s, int pairs, bool common) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * pairs);
  double len = uniform_length(s);
  for (int i = 0; i < pairs; ++i) {
    if (!common && i > 0) len = uniform_length(s);
    arcs.push_back(uniform_arc(s, len));
    arcs.push_back(uniform_arc(s, len));
  }
  return all_disjoint(arcs);
}

Spec event_spec(std::string name, std::string description, double target, double floor, std::string ref,
                std::function<bool(Stream&)> trial, std::uint64_t default_n = 1'000'000) {
  Spec spec;
  spec.info = {name, std::move(description), default_n};
  spec.counters = 1;
  spec.body = [trial](Stream& s, std::uint64_t count, Tally& t) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (trial(s)) ++t.counts[0];
  };
  spec.finish = [name, target, floor, ref](const Tally& t, std::uint64_t n, ExperimentResult& r) {
    r.measurements.push_back(checked_event(name, t.counts[0], n, target, floor, ref));
  };
  return spec;
}

struct CdfCache {
  std::mutex mutex;
  std::map<std::string, analytic::CdfTable, std::less<>> tables;

  const analytic::CdfTable& get(std::string_view name) {
    std::lock_guard lock(mutex);
    auto it = tables.find(name);
    if (it == tables.end()) it = tables.emplace(std::string(name), analytic::cdf_of(analytic::density(name))).first;
    return it->second;
  }
};

CdfCache& cdf_cache() {
  static CdfCache cache;
  return cache;
}

Spec ks_spec(std::string name, std::string density, std::string ref, std::function<double(Stream&)> draw) {
  Spec spec;
  spec.info = {name, "Kolmogorov-Smirnov test of sampled values against the '" + density + "' density",
               kKsSampleCap};
  spec.max_n = kKsSampleCap;
  spec.body = [draw](Stream& s, std::uint64_t count, Tally& t) {
    t.samples.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) t.samples.push_back(draw(s));
  };
  spec.finish = [name, density, ref](const Tally& t, std::uint64_t n, ExperimentResult& r) {
    const KsResult ks = ks_test(t.samples, cdf_cache().get(density));
    Measurement m;
    m.name = name;
    m.kind = MeasurementKind::Ks;
    m.n = n;
    m.p_hat = ks.statistic;
    m.target = 0.0;
    m.tolerance = ks.threshold / std::sqrt(static_cast<double>(n));
    m.sigma_distance = ks.statistic * std::sqrt(static_cast<double>(n));
    m.pass = ks.pass;
    m.target_ref = ref;
    m.note = "D*sqrt(n) < 1.95";
    r.measurements.push_back(m);
    r.ks = ks;
  };
  return spec;
}

std::vector<Spec> build_specs() {
  std::vector<Spec> specs;

  specs.push_back(event_spec(
      "isometric-disjoint", "isometric arcs of a random f are disjoint", 0.5, 0.004,
      "isometric circles of f are disjoint with probability 1/2", [](Stream& s) {
        const IsometricArcs iso = isometric_arcs(sample_mobius(s));
        return arcs_disjoint(iso.plus_arc, iso.minus_arc);
      }));

  specs.push_back(event_spec(
      "cyclic-discrete", "random f is parabolic or hyperbolic, so <f> is discrete", 0.5, 0.004,
      "cyclic group <f> is discrete with probability 1/2", [](Stream& s) {
        const Kind k = classify(sample_mobius(s)).kind;
        return k == Kind::Hyperbolic || k == Kind::Parabolic;
      }));

  {
    // gamma < 0, with the cross-ratio and endpoint-interleaving duals counted
    Spec spec;
    spec.info = {"axes-cross", "axes of two random hyperbolic elements cross (gamma < 0)", 1'000'000};
    spec.counters = 4;
    spec.body = [](Stream& s, std::uint64_t count, Tally& t) {
      for (std::uint64_t i = 0; i < count; ++i) {
        const MobiusTransform f = sample_hyperbolic(s);
        const MobiusTransform g = sample_hyperbolic(s);
        const bool by_gamma = gamma(f, g) < 0.0;
        const bool by_ratio = fixed_point_cross_ratio(f, g) > 1.0;
        const bool by_interleave = endpoints_interleave(axis(f), axis(g));
        t.counts[0] += by_gamma;
        t.counts[1] += by_ratio;
        t.counts[2] += by_interleave;
        t.counts[3] += (by_gamma != by_ratio) || (by_gamma != by_interleave);
      }
    };
    spec.finish = [](const Tally& t, std::uint64_t n, ExperimentResult& r) {
      const std::string ref = "axes cross with probability about 0.429601";
      r.measurements.push_back(checked_event("axes-cross", t.counts[0], n, 0.4296, 0.003, ref));
      r.measurements.push_back(checked_event("axes-cross/cross-ratio", t.counts[1], n, 0.4296, 0.003,
                                             "axes cross iff the fixed-point cross ratio exceeds 1"));
      r.measurements.push_back(checked_event("axes-cross/interleave", t.counts[2], n, 0.4296, 0.003,
                                             "axes cross iff their endpoints interleave"));
      Measurement mism = event_estimate("axes-cross/criteria-disagree", t.counts[3], n);
      assert_target(mism, 0.0, std::max(1e-5, 10.0 / static_cast<double>(n)), "the three criteria agree");
      r.measurements.push_back(mism);
    };
    specs.push_back(std::move(spec));
  }

  auto gamma_histogram = [](std::string name, bool hyperbolic) {
    Spec spec;
    spec.info = {name,
                 hyperbolic ? "histogram of gamma over random hyperbolic pairs"
                            : "histogram of gamma over random pairs",
                 1'000'000};
    spec.counters = 1;
    spec.hist = Histogram::uniform(-20.0, 20.0, 400);
    spec.body = [hyperbolic](Stream& s, std::uint64_t count, Tally& t) {
      for (std::uint64_t i = 0; i < count; ++i) {
        const MobiusTransform f = hyperbolic ? sample_hyperbolic(s) : sample_mobius(s);
        const MobiusTransform g = hyperbolic ? sample_hyperbolic(s) : sample_mobius(s);
        const double value = gamma(f, g);
        t.hist->add(value);
        t.counts[0] += value < -4.0;
      }
    };
    spec.finish = [name, hyperbolic](const Tally& t, std::uint64_t n, ExperimentResult& r) {
      r.histogram = t.hist;
      Measurement m = event_estimate(name + "/below-minus4", t.counts[0], n);
      if (hyperbolic)
        assert_target(m, 0.266818, std::max(0.003, event_band(0.266818, n)),
                      "mass of gamma below -4 for hyperbolic pairs is 0.266818");
      else
        m = reported(m, std::nullopt, "", "no closed form is known for the gamma distribution");
      r.measurements.push_back(m);
    };
    return spec;
  };
  specs.push_back(gamma_histogram("gamma-histogram", false));
  specs.push_back(gamma_histogram("gamma-hyperbolic-histogram", true));

  specs.push_back(event_spec("gamma-below-minus4", "gamma < -4 for a random hyperbolic pair", 0.2668, 0.003,
                             "0.266818 of hyperbolic pairs have gamma < -4", [](Stream& s) {
                               const MobiusTransform f = sample_hyperbolic(s);
                               return gamma(f, sample_hyperbolic(s)) < -4.0;
                             }));
  specs.push_back(event_spec("gamma-in-minus4-0", "-4 < gamma < 0 for a random hyperbolic pair", 0.1624, 0.003,
                             "0.162394 of hyperbolic pairs have gamma in (-4, 0)", [](Stream& s) {
                               const MobiusTransform f = sample_hyperbolic(s);
                               const double value = gamma(f, sample_hyperbolic(s));
                               return value > -4.0 && value < 0.0;
                             }));
  specs.push_back(event_spec("jorgensen-fail", "random hyperbolic pair fails Jorgensen's inequality", 0.111, 0.010,
                             "about 1/9 of hyperbolic pairs fail Jorgensen's test", [](Stream& s) {
                               const MobiusTransform f = sample_hyperbolic(s);
                               return jorgensen_fails(f, sample_hyperbolic(s));
                             }));

  specs.push_back(event_spec("chords-cross", "two chords with uniform endpoints cross", 1.0 / 3.0, 0.004,
                             "two random chords cross with probability 1/3", [](Stream& s) {
                               HyperbolicLine l1{std::polar(1.0, kTwoPi * s.uniform()),
                                                 std::polar(1.0, kTwoPi * s.uniform())};
                               HyperbolicLine l2{std::polar(1.0, kTwoPi * s.uniform()),
                                                 std::polar(1.0, kTwoPi * s.uniform())};
                               return endpoints_interleave(l1, l2);
                             }));

  specs.push_back(event_spec("arcs-disjoint-half", "two random arcs with lengths uniform on [0, pi] are disjoint",
                             0.5, 0.004, "two random arcs of length at most pi are disjoint with probability 1/2",
                             [](Stream& s) {
                               const Arc x = sample_arc(s, ArcSupport::HalfTurn);
                               return arcs_disjoint(x, sample_arc(s, ArcSupport::HalfTurn));
                             }));
  specs.push_back(event_spec("arcs-disjoint-full",
                             "two random arcs with lengths uniform on [0, 2 pi] are disjoint", 1.0 / 6.0, 0.004,
                             "two random arcs of length at most 2 pi are disjoint with probability 1/6",
                             [](Stream& s) {
                               const Arc x = sample_arc(s, ArcSupport::FullTurn);
                               return arcs_disjoint(x, sample_arc(s, ArcSupport::FullTurn));
                             }));

  specs.push_back(event_spec("two-pairs-all-disjoint", "all four arcs of two random arc pairs are disjoint", 0.05,
                             0.002, "all arcs of two random pairs are disjoint with probability 1/20",
                             [](Stream& s) { return pairs_all_disjoint(s, 2, false); }));
  specs.push_back(event_spec(
      "two-pairs-conditional", "two arc pairs, each with disjoint arcs, are disjoint from each other", 0.2, 0.004,
      "given each pair is disjoint, the pairs are disjoint with probability 1/5", [](Stream& s) {
        for (;;) {
          const double la = uniform_length(s);
          const Arc a1 = uniform_arc(s, la), a2 = uniform_arc(s, la);
          const double lb = uniform_length(s);
          const Arc b1 = uniform_arc(s, lb), b2 = uniform_arc(s, lb);
          if (!arcs_disjoint(a1, a2) || !arcs_disjoint(b1, b2)) continue;
          const Arc all[] = {a1, a2, b1, b2};
          return all_disjoint(all);
        }
      }));
  specs.push_back(event_spec("three-pairs-all-disjoint", "all six arcs of three random arc pairs are disjoint",
                             0.003, 0.0005, "all arcs of three random pairs are disjoint with probability 3/1000",
                             [](Stream& s) { return pairs_all_disjoint(s, 3, false); }, 10'000'000));

  specs.push_back(event_spec("equal-length-pairs-2", "two arc pairs with one common random length are disjoint",
                             0.125, 0.003, "two pairs of equal-length arcs are disjoint with probability 1/8",
                             [](Stream& s) { return pairs_all_disjoint(s, 2, true); }));
  {
    Spec spec = event_spec("equal-length-pairs-3", "three arc pairs with one common random length are disjoint",
                           0.045, 0.002, "three pairs of equal-length arcs are disjoint with probability 9/200",
                           [](Stream& s) { return pairs_all_disjoint(s, 3, true); });
    auto base = spec.finish;
    spec.finish = [base](const Tally& t, std::uint64_t n, ExperimentResult& r) {
      base(t, n, r);
      const analytic::EqualArcsProbability p = analytic::prob_equal_arcs_disjoint(3);
      std::ostringstream note;
      note << "exact gap integral gives 1/18 = " << format_double(p.exact) << "; Irwin-Hall route gives "
           << format_double(p.irwin_hall_route);
      r.measurements.back().note = note.str();
    };
    specs.push_back(std::move(spec));
  }

  specs.push_back(ks_spec("ks-beta", "beta", "density of beta(f)",
                          [](Stream& s) { return beta(sample_mobius(s)); }));
  specs.push_back(ks_spec("ks-tau", "tau", "density of the translation length",
                          [](Stream& s) { return classify(sample_hyperbolic(s)).tau; }));
  specs.push_back(ks_spec("ks-abs-a", "abs-a", "density of |a|",
                          [](Stream& s) { return std::abs(sample_mobius(s).a()); }));
  specs.push_back(ks_spec("ks-f0", "f0", "density of |f(0)|",
                          [](Stream& s) { return std::abs(apply(sample_mobius_disk_form(s).to_mobius(), 0.0)); }));
  specs.push_back(ks_spec("ks-half-angle", "half-angle", "density of the fixed-point half angle",
                          [](Stream& s) { return half_angle(sample_hyperbolic(s)); }));

  {
    Spec spec;
    spec.info = {"mean-tau", "mean translation length of a random hyperbolic element", 1'000'000};
    spec.sums = 2;
    spec.body = [](Stream& s, std::uint64_t count, Tally& t) {
      for (std::uint64_t i = 0; i < count; ++i) {
        const double tau = classify(sample_hyperbolic(s)).tau;
        t.sums[0].add(tau);
        t.sums[1].add(tau * tau);
      }
    };
    spec.finish = [](const Tally& t, std::uint64_t n, ExperimentResult& r) {
      r.measurements.push_back(checked_mean("mean-tau", t.sums[0], t.sums[1], n,
                                            analytic::expected_translation_length(), 0.02,
                                            "expected translation length is 4 log 2"));
    };
    specs.push_back(std::move(spec));
  }
  {
    Spec spec;
    spec.info = {"mean-f0", "mean |f(0)| under the disk parametrization", 1'000'000};
    spec.sums = 2;
    spec.body = [](Stream& s, std::uint64_t count, Tally& t) {
      for (std::uint64_t i = 0; i < count; ++i) {
        const double y = std::abs(apply(sample_mobius_disk_form(s).to_mobius(), 0.0));
        t.sums[0].add(y);
        t.sums[1].add(y * y);
      }
    };
    spec.finish = [](const Tally& t, std::uint64_t n, ExperimentResult& r) {
      r.measurements.push_back(checked_mean("mean-f0", t.sums[0], t.sums[1], n, analytic::expected_f0(), 0.002,
                                            "expected |f(0)| is 2/pi"));
    };
    specs.push_back(std::move(spec));
  }

  {
    static const std::vector<double> radii{0.25, 0.5, 0.678, 1.0, 2.24419};
    Spec spec;
    spec.info = {"axis-meets-disk", "axis of a random hyperbolic element meets the disk of radius r about 0",
                 1'000'000};
    spec.counters = radii.size();
    spec.body = [](Stream& s, std::uint64_t count, Tally& t) {
      for (std::uint64_t i = 0; i < count; ++i) {
        // distance from 0 to the geodesic whose endpoints subtend 2 eta:
        // cosh(d) = 1 / sin(eta)
        const double d = std::acosh(1.0 / std::sin(half_angle(sample_hyperbolic(s))));
        for (std::size_t k = 0; k < radii.size(); ++k) t.counts[k] += d <= radii[k];
      }
    };
    spec.finish = [](const Tally& t, std::uint64_t n, ExperimentResult& r) {
      for (std::size_t k = 0; k < radii.size(); ++k) {
        std::ostringstream name;
        name << "axis-meets-disk/r=" << radii[k];
        r.measurements.push_back(checked_event(name.str(), t.counts[k], n,
                                               analytic::prob_axis_meets_disk(radii[k]), 0.004,
                                               "(4/pi^2)(Li2(tanh r) - Li2(-tanh r))"));
      }
    };
    specs.push_back(std::move(spec));
  }

  {
    Spec spec;
    spec.info = {"crossratio-histogram", "fixed-point cross ratio of random hyperbolic pairs", 1'000'000};
    spec.counters = 1;
    spec.hist = Histogram::uniform(-10.0, 10.0, 400);
    spec.body = [](Stream& s, std::uint64_t count, Tally& t) {
      for (std::uint64_t i = 0; i < count; ++i) {
        const MobiusTransform f = sample_hyperbolic(s);
        const double x = fixed_point_cross_ratio(f, sample_hyperbolic(s));
        t.hist->add(x);
        t.counts[0] += x >= 1.0;
      }
    };
    spec.finish = [](const Tally& t, std::uint64_t n, ExperimentResult& r) {
      r.histogram = t.hist;
      r.measurements.push_back(reported(event_estimate("crossratio-histogram/at-least-1", t.counts[0], n), 0.2,
                                        "suggested value 1/5 for Pr{cross ratio >= 1}",
                                        "reported only; the event is the axes-cross event"));
    };
    specs.push_back(std::move(spec));
  }

  {
    Spec spec;
    spec.info = {"axes-cross-quadrature", "axes-cross probability by deterministic nested quadrature", 1};
    spec.max_n = 1;
    spec.body = [](Stream&, std::uint64_t, Tally&) {};
    spec.finish = [](const Tally&, std::uint64_t, ExperimentResult& r) {
      Measurement m;
      m.name = "axes-cross-quadrature";
      m.kind = MeasurementKind::Value;
      m.p_hat = analytic::axes_cross_probability_quadrature();
      assert_target(m, 0.429, 0.002, "quadrature returned the value 0.429");
      r.measurements.push_back(m);
    };
    specs.push_back(std::move(spec));
  }

  auto pingpong = [](std::string name, std::string description, double target, double floor, std::string ref,
                     std::function<MobiusTransform(Stream&)> sampler, VerdictStatus wanted) {
    return event_spec(std::move(name), std::move(description), target, floor, std::move(ref),
                      [sampler, wanted](Stream& s) {
                        const MobiusTransform gens[] = {sampler(s), sampler(s)};
                        return ping_pong(gens).status == wanted;
                      });
  };
  specs.push_back(pingpong("pingpong-hyperbolic", "ping-pong certificate for two random hyperbolic elements", 0.2,
                           0.004, "two hyperbolic generators give a discrete free group with probability 1/5",
                           sample_hyperbolic, VerdictStatus::DiscreteFreeByPingPong));
  specs.push_back(pingpong("pingpong-all", "ping-pong certificate for two random elements", 0.05, 0.002,
                           "two random generators give a discrete free group with probability 1/20",
                           sample_mobius, VerdictStatus::DiscreteFreeByPingPong));
  specs.push_back(pingpong("pingpong-parabolic", "ping-pong certificate with tangency for two random parabolics",
                           1.0 / 6.0, 0.004, "two parabolic generators give a discrete group with probability 1/6",
                           sample_parabolic, VerdictStatus::DiscreteByPingPongWithTangency));
  return specs;
}

const std::vector<Spec>& specs() {
  static const std::vector<Spec> all = build_specs();
  return all;
}

const Spec& find_spec(std::string_view name) {
  for (const Spec& s : specs())
    if (s.info.name == name) return s;
  throw Error(ErrorCode::UnknownExperiment, "no experiment named '" + std::string(name) + "'");
}

Tally empty_tally(const Spec& spec) {
  Tally t;
  t.counts.assign(spec.counters, 0);
  t.sums.assign(spec.sums, FixedSum{});
  t.hist = spec.hist;
  return t;
}

} // namespace

bool ExperimentResult::pass() const {
  return std::all_of(measurements.begin(), measurements.end(),
                     [](const Measurement& m) { return !m.asserted || m.pass; });
}

const Measurement& ExperimentResult::measurement(std::string_view key) const {
  for (const Measurement& m : measurements)
    if (m.name == key) return m;
  throw Error(ErrorCode::InvalidArgument, "no measurement named '" + std::string(key) + "'");
}

const std::vector<ExperimentInfo>& registry() {
  static const std::vector<ExperimentInfo> infos = [] {
    std::vector<ExperimentInfo> out;
    for (const Spec& s : specs()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

bool is_registered(std::string_view name) {
  return std::any_of(specs().begin(), specs().end(), [&](const Spec& s) { return s.info.name == name; });
}

ExperimentResult run(std::string_view name, const RunConfig& config) {
  const Spec& spec = find_spec(name);
  if (config.n < kMinTrials) throw Error(ErrorCode::InvalidArgument, "n must be at least 1000");
  if (config.streams == 0) throw Error(ErrorCode::InvalidArgument, "streams must be positive");

  ExperimentResult result;
  result.name = spec.info.name;
  result.config = config;
  const std::uint64_t n = spec.max_n ? std::min(config.n, spec.max_n) : config.n;
  result.config.n = n;

  const std::uint32_t streams = config.streams;
  std::vector<Tally> tallies(streams, empty_tally(spec));
  std::atomic<std::uint32_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint32_t i = next++; i < streams; i = next++) {
      try {
        const std::uint64_t count = n / streams + (i < n % streams ? 1 : 0);
        Stream stream(config.seed, i);
        spec.body(stream, count, tallies[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, streams);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  Tally merged = empty_tally(spec);
  for (const Tally& t : tallies) merged.merge(t);
  spec.finish(merged, n, result);
  for (Measurement& m : result.measurements)
    if (m.n == 0 && m.kind != MeasurementKind::Value) m.n = n;
  return result;
}

std::vector<ExperimentResult> run_all(const RunConfig& config) {
  constexpr std::uint64_t kBaseline = 1'000'000;
  std::vector<ExperimentResult> out;
  for (const Spec& s : specs()) {
    RunConfig c = config;
    if (s.info.default_n > kBaseline) c.n = config.n * (s.info.default_n / kBaseline);
    out.push_back(run(s.info.name, c));
  }
  return out;
}

namespace {

std::string_view kind_label(MeasurementKind k) {
  switch (k) {
  case MeasurementKind::Event: return "event";
  case MeasurementKind::Mean: return "mean";
  case MeasurementKind::Ks: return "ks";
  case MeasurementKind::Histogram: return "histogram";
  case MeasurementKind::Value: return "value";
  }
  return "unknown";
}

std::string record_json(const Measurement& m, std::uint64_t seed) {
  std::ostringstream o;
  o << "{\"name\":" << json_string(m.name) << ",\"kind\":" << json_string(kind_label(m.kind)) << ",\"n\":" << m.n
    << ",\"seed\":" << seed << ",\"p_hat\":" << format_double(m.p_hat) << ",\"std_err\":" << format_double(m.std_err)
    << ",\"target\":" << (m.target ? format_double(*m.target) : "null")
    << ",\"tolerance\":" << format_double(m.tolerance) << ",\"sigma_distance\":" << format_double(m.sigma_distance)
    << ",\"pass\":" << (m.pass ? "true" : "false") << ",\"asserted\":" << (m.asserted ? "true" : "false")
    << ",\"target_ref\":" << json_string(m.target_ref) << ",\"note\":" << json_string(m.note) << "}";
  return o.str();
}

} // namespace

std::string to_json(const ExperimentResult& r) {
  std::ostringstream o;
  o << "{\"experiment\":" << json_string(r.name) << ",\"n\":" << r.config.n << ",\"seed\":" << r.config.seed
    << ",\"streams\":" << r.config.streams << ",\"pass\":" << (r.pass() ? "true" : "false") << ",\"results\":[";
  for (std::size_t i = 0; i < r.measurements.size(); ++i)
    o << (i ? "," : "") << record_json(r.measurements[i], r.config.seed);
  o << "]}";
  return o.str();
}

std::string to_json(const std::vector<ExperimentResult>& results) {
  std::ostringstream o;
  const bool pass = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass(); });
  o << "{\"pass\":" << (pass ? "true" : "false") << ",\"experiments\":[";
  for (std::size_t i = 0; i < results.size(); ++i) o << (i ? "," : "") << to_json(results[i]);
  o << "]}";
  return o.str();
}

std::string histogram_csv(const Histogram& h) {
  std::ostringstream o;
  o << "bin_left,bin_right,count\n";
  o << "-inf," << format_double(h.edges.front()) << "," << h.underflow << "\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    o << format_double(h.edges[i]) << "," << format_double(h.edges[i + 1]) << "," << h.counts[i] << "\n";
  o << format_double(h.edges.back()) << ",inf," << h.overflow << "\n";
  return o.str();
}

std::string summary(const std::vector<ExperimentResult>& results) {
  std::ostringstream o;
  char line[256];
  std::snprintf(line, sizeof line, "%-40s %10s %12s %12s %10s  %s\n", "measurement", "n", "estimate", "target",
                "tolerance", "status");
  o << line;
  for (const ExperimentResult& r : results) {
    for (const Measurement& m : r.measurements) {
      const char* status = !m.asserted ? "reported" : (m.pass ? "pass" : "FAIL");
      char target[32] = "-";
      if (m.target) std::snprintf(target, sizeof target, "%.6g", *m.target);
      std::snprintf(line, sizeof line, "%-40s %10llu %12.6g %12s %10.3g  %s\n", m.name.c_str(),
                    static_cast<unsigned long long>(m.n), m.p_hat, target, m.tolerance, status);
      o << line;
    }
  }
  return o.str();
}

} // namespace rfg::mc

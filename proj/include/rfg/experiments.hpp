#pragma once
// Registry of named, seeded Monte Carlo experiments.
//
// A run splits n trials over `streams` random streams (stream i draws from
// Stream(seed, i)), lets `workers` threads process whole streams, and merges
// the per-stream tallies in stream order. Results therefore depend on
// (name, n, seed, streams) only, never on the worker count.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rfg/stats.hpp"

namespace rfg::mc {

struct ExperimentInfo {
  std::string name;
  std::string description;
  std::uint64_t default_n = 1'000'000;
};

struct RunConfig {
  std::uint64_t n = 1'000'000;
  std::uint64_t seed = 42;
  std::uint32_t streams = 16;
  unsigned workers = 0; ///< 0: one per hardware thread
};

struct ExperimentResult {
  std::string name;
  RunConfig config;
  std::vector<Measurement> measurements;
  std::optional<Histogram> histogram;
  std::optional<KsResult> ks;

  /// Every asserted measurement passes.
  bool pass() const;
  const Measurement& measurement(std::string_view name) const;
};

const std::vector<ExperimentInfo>& registry();
bool is_registered(std::string_view name);

inline constexpr std::uint64_t kMinTrials = 1000;

/// Throws UnknownExperiment, or InvalidArgument for n < kMinTrials or
/// streams = 0.
ExperimentResult run(std::string_view name, const RunConfig& config);

/// Runs the whole registry with a common n and seed. Experiments whose
/// default_n is larger than the common default are scaled up by the same
/// factor; goodness-of-fit experiments cap their sample size.
std::vector<ExperimentResult> run_all(const RunConfig& config);

/// Sample size used for the goodness-of-fit experiments.
inline constexpr std::uint64_t kKsSampleCap = 100'000;

/// JSON report: {"experiment", "n", "seed", "streams", "pass", "results": [
///   {name, kind, n, seed, p_hat, std_err, target, tolerance, sigma_distance,
///    pass, asserted, target_ref, note}, ...]} with 17 significant digits.
std::string to_json(const ExperimentResult& result);
std::string to_json(const std::vector<ExperimentResult>& results);
/// CSV with header bin_left,bin_right,count; underflow and overflow rows use
/// -inf and inf for the open side.
std::string histogram_csv(const Histogram& h);
/// Plain-text table, one line per measurement.
std::string summary(const std::vector<ExperimentResult>& results);

} // namespace rfg::mc

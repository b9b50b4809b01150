#pragma once
// Estimates, goodness-of-fit and histograms for the Monte Carlo harness.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rfg/analytic.hpp"

namespace rfg {

enum class MeasurementKind { Event, Mean, Ks, Histogram, Value };

struct Measurement {
  std::string name;
  MeasurementKind kind = MeasurementKind::Event;
  std::uint64_t n = 0;
  std::uint64_t hits = 0; ///< events only
  double p_hat = 0.0;     ///< frequency, sample mean, KS statistic D or computed value
  double std_err = 0.0;
  std::optional<double> target;
  double tolerance = 0.0; ///< pass band half-width around target
  double sigma_distance = 0.0;
  bool asserted = true; ///< false for values that are reported only
  bool pass = true;
  std::string target_ref;
  std::string note;
};

/// Binomial estimate hits / n with std_err sqrt(p (1 - p) / n).
Measurement event_estimate(std::string name, std::uint64_t hits, std::uint64_t n);
/// Sample mean estimate from a sum and a sum of squares.
Measurement mean_estimate(std::string name, double sum, double sum_sq, std::uint64_t n);
/// Sets target, tolerance, sigma_distance and pass.
void assert_target(Measurement& m, double target, double tolerance, std::string target_ref);

inline constexpr double kKsThreshold = 1.95;

struct KsResult {
  double statistic = 0.0; ///< D_n
  std::uint64_t n = 0;
  double threshold = kKsThreshold;
  bool pass = false; ///< D_n sqrt(n) < threshold
};

/// Two-sided one-sample Kolmogorov-Smirnov test; sorts a copy of the samples.
KsResult ks_test(std::span<const double> samples, const analytic::CdfTable& cdf);

struct Histogram {
  std::vector<double> edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t underflow = 0;
  std::uint64_t overflow = 0;

  /// edges.size() - 1 equal bins on [lo, hi].
  static Histogram uniform(double lo, double hi, std::size_t bins);
  void add(double x);
  void merge(const Histogram& other);
  std::uint64_t total() const;
};

Histogram histogram(std::span<const double> samples, std::vector<double> edges);

/// Order-independent exact sum of doubles in 2^-70 fixed point, so partial
/// sums from different streams merge to the same bits in any order. The
/// accumulated magnitude must stay below 2^56; bits below 2^-70 are rounded.
class FixedSum {
public:
  void add(double x);
  void merge(const FixedSum& other) { value_ += other.value_; }
  double value() const;

private:
  __int128 value_ = 0;
};

} // namespace rfg

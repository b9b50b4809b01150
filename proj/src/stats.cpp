#include "rfg/stats.hpp"

#include <algorithm>
#include <cmath>

#include "rfg/error.hpp"

namespace rfg {

namespace {

constexpr int kFixedShift = 70;

} // namespace

Measurement event_estimate(std::string name, std::uint64_t hits, std::uint64_t n) {
  Measurement m;
  m.name = std::move(name);
  m.kind = MeasurementKind::Event;
  m.n = n;
  m.hits = hits;
  if (n > 0) {
    m.p_hat = static_cast<double>(hits) / static_cast<double>(n);
    m.std_err = std::sqrt(m.p_hat * (1.0 - m.p_hat) / static_cast<double>(n));
  }
  return m;
}

Measurement mean_estimate(std::string name, double sum, double sum_sq, std::uint64_t n) {
  Measurement m;
  m.name = std::move(name);
  m.kind = MeasurementKind::Mean;
  m.n = n;
  if (n > 0) {
    const double nn = static_cast<double>(n);
    m.p_hat = sum / nn;
    const double var = n > 1 ? std::max(0.0, (sum_sq - nn * m.p_hat * m.p_hat) / (nn - 1.0)) : 0.0;
    m.std_err = std::sqrt(var / nn);
  }
  return m;
}

void assert_target(Measurement& m, double target, double tolerance, std::string target_ref) {
  m.target = target;
  m.tolerance = tolerance;
  m.target_ref = std::move(target_ref);
  const double diff = m.p_hat - target;
  m.sigma_distance = m.std_err > 0.0 ? diff / m.std_err : (diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff));
  m.pass = std::isfinite(m.p_hat) && std::abs(diff) <= tolerance;
}

KsResult ks_test(std::span<const double> samples, const analytic::CdfTable& cdf) {
  if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "ks_test needs samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  KsResult out;
  out.statistic = d;
  out.n = sorted.size();
  out.pass = d * std::sqrt(n) < out.threshold;
  return out;
}

Histogram Histogram::uniform(double lo, double hi, std::size_t bins) {
  if (!(lo < hi) || bins == 0) throw Error(ErrorCode::InvalidArgument, "histogram needs lo < hi and bins > 0");
  Histogram h;
  for (std::size_t i = 0; i <= bins; ++i)
    h.edges.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins));
  h.counts.assign(bins, 0);
  return h;
}

void Histogram::add(double x) {
  if (!(x >= edges.front())) {
    ++underflow; // NaN lands here too
    return;
  }
  if (x >= edges.back()) {
    ++overflow;
    return;
  }
  const auto it = std::upper_bound(edges.begin(), edges.end(), x);
  ++counts[static_cast<std::size_t>(it - edges.begin()) - 1];
}

void Histogram::merge(const Histogram& other) {
  if (other.edges != edges) throw Error(ErrorCode::InvalidArgument, "histogram edges differ");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  underflow += other.underflow;
  overflow += other.overflow;
}

std::uint64_t Histogram::total() const {
  std::uint64_t t = underflow + overflow;
  for (auto c : counts) t += c;
  return t;
}

Histogram histogram(std::span<const double> samples, std::vector<double> edges) {
  if (edges.size() < 2 || !std::is_sorted(edges.begin(), edges.end()))
    throw Error(ErrorCode::InvalidArgument, "histogram edges must be sorted with at least two entries");
  Histogram h;
  h.edges = std::move(edges);
  h.counts.assign(h.edges.size() - 1, 0);
  for (double x : samples) h.add(x);
  return h;
}

void FixedSum::add(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "FixedSum::add needs a finite value");
  value_ += static_cast<__int128>(std::nearbyint(std::ldexp(x, kFixedShift)));
}

double FixedSum::value() const { return std::ldexp(static_cast<double>(value_), -kFixedShift); }

} // namespace rfg

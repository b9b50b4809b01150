#include "rfg/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rfg/error.hpp"
#include "rfg/quadrature.hpp"

namespace rfg::analytic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void domain_error(std::string_view what, double x) {
  throw Error(ErrorCode::DomainError, std::string(what) + " undefined at " + std::to_string(x));
}

double dilog_series(double x) {
  double sum = 0.0;
  double power = x;
  for (int n = 1; n < 200; ++n) {
    const double term = power / (static_cast<double>(n) * n);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    power *= x;
  }
  return sum;
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// log((x + k) / |x - k|) given d = x - k computed without cancellation.
double log_ratio(double x, double d, double k) {
  if (d > 0.0) return std::log1p(2.0 * k / d);
  return std::log1p(2.0 * x / -d);
}

double factorial(int n) {
  double out = 1.0;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

} // namespace

double dilog(double x) {
  if (!(x >= -1.0 && x <= 1.0)) domain_error("dilog", x);
  if (x == 1.0) return kPi2 / 6.0;
  if (std::abs(x) <= 0.5) return dilog_series(x);
  if (x > 0.5) return kPi2 / 6.0 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
  // Landen: x / (x - 1) lies in (1/3, 1/2] for x in [-1, -1/2)
  const double l = std::log1p(-x);
  return -dilog_series(x / (x - 1.0)) - 0.5 * l * l;
}

double pdf_abs_a(double x) {
  if (!(x > 1.0) || std::isinf(x)) domain_error("pdf_abs_a", x);
  return 2.0 / (kPi * x * std::sqrt((x - 1.0) * (x + 1.0)));
}

double pdf_f0(double y) {
  if (!(y >= 0.0 && y < 1.0)) domain_error("pdf_f0", y);
  return 2.0 / (kPi * std::sqrt((1.0 - y) * (1.0 + y)));
}

double expected_f0() { return 2.0 / kPi; }

double f0_plugin_distance() { return std::log((kPi + 2.0) / (kPi - 2.0)); }

double pdf_ratio_x(double x) {
  if (!(x > 0.0 && x < 1.0)) domain_error("pdf_ratio_x", x);
  // log((1 + x) / (1 - x)) = 2 atanh(x)
  return 8.0 * std::atanh(x) / (kPi2 * x);
}

double pdf_half_angle(double eta) {
  if (!(eta > 0.0 && eta < kPi / 2.0)) domain_error("pdf_half_angle", eta);
  // log((1 + cos) / (1 - cos)) = -2 log tan(eta / 2)
  return -8.0 / kPi2 * std::tan(eta) * std::log(std::tan(eta / 2.0));
}

double prob_axis_meets_disk(double r) {
  if (!(r >= 0.0)) domain_error("prob_axis_meets_disk", r);
  const double t = std::tanh(r);
  return 4.0 / kPi2 * (dilog(t) - dilog(-t));
}

double pdf_trace(double s) {
  if (!(s > 0.0) || s == 2.0 || std::isinf(s)) domain_error("pdf_trace", s);
  return 2.0 / (kPi2 * s) * log_ratio(s, s - 2.0, 2.0);
}

double pdf_trace_arccosh(double s) {
  if (!(s > 2.0) || std::isinf(s)) domain_error("pdf_trace_arccosh", s);
  return 4.0 / (kPi2 * s) * std::acosh(s / std::sqrt((s - 2.0) * (s + 2.0)));
}

double pdf_beta(double b) {
  if (!(b > -4.0) || b == 0.0 || std::isinf(b)) domain_error("pdf_beta", b);
  const double v = std::sqrt(b + 4.0);
  // v - 2 = b / (v + 2) without cancellation
  return 1.0 / (kPi2 * (b + 4.0)) * log_ratio(v, b / (v + 2.0), 2.0);
}

double pdf_w(double w) {
  if (!(w > 0.0) || w == 1.0 || std::isinf(w)) domain_error("pdf_w", w);
  const double r = std::sqrt(w);
  return 1.0 / (kPi2 * w) * log_ratio(r, (w - 1.0) / (r + 1.0), 1.0);
}

double pdf_translation_length(double tau) {
  if (!(tau > 0.0) || std::isinf(tau)) domain_error("pdf_translation_length", tau);
  // log tanh(tau/4) = log1p(-2 / (e^{tau/2} + 1)) keeps precision for large tau
  const double log_tanh =
      tau < 1.0 ? std::log(std::tanh(tau / 4.0)) : std::log1p(-2.0 / (std::exp(tau / 2.0) + 1.0));
  return -4.0 / kPi2 * std::tanh(tau / 2.0) * log_tanh;
}

double expected_translation_length() { return 4.0 * std::numbers::ln2; }

double irwin_hall_pdf(int m, double x) {
  if (m < 1) throw Error(ErrorCode::DomainError, "irwin_hall_pdf needs m >= 1");
  if (!(x >= 0.0 && x <= m)) domain_error("irwin_hall_pdf", x);
  const int top = std::min(static_cast<int>(std::floor(x)), m - 1);
  double sum = 0.0;
  for (int k = 0; k <= top; ++k) {
    const double term = binomial(m, k) * std::pow(x - k, m - 1);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum / factorial(m - 1);
}

EqualArcsProbability prob_equal_arcs_disjoint(int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "prob_equal_arcs_disjoint needs n >= 1");
  EqualArcsProbability out;
  out.exact = 1.0 / (2.0 * n * n);

  const int m = 2 * n - 1;
  std::vector<double> breaks;
  for (int k = 1; k < m; ++k) breaks.push_back(k);
  auto inner = [&](double t) {
    const double upper = std::min(2.0 - t, static_cast<double>(m));
    return quad::integrate([m](double x) { return irwin_hall_pdf(m, x); }, 0.0, upper, breaks, 1e-13);
  };
  out.irwin_hall_route = quad::integrate(inner, 0.0, 1.0, {}, 1e-12) / (2.0 * n);

  auto summand = [n](double x) {
    double sum = 0.0;
    const int top = static_cast<int>(std::floor(2.0 - x));
    for (int k = 0; k <= std::min(top, n); ++k) {
      const double term = binomial(n, k) * std::pow(2.0 - x - k, n);
      sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
  };
  out.prefactor_formula = quad::integrate(summand, 0.0, 1.0, {}, 1e-13) / (2.0 * n * factorial(n));
  return out;
}

double min_gap_survival(double psi) {
  if (!(psi >= 0.0 && psi <= kPi)) domain_error("min_gap_survival", psi);
  return std::pow(1.0 - psi / kPi, 4);
}

double min_gap_pdf(double psi) {
  if (!(psi >= 0.0 && psi <= kPi)) domain_error("min_gap_pdf", psi);
  return 4.0 * std::pow(1.0 - psi / kPi, 3) / kPi;
}

double expected_min_gap() { return kPi / 5.0; }

double pdf_crossing_s(double s) {
  if (!(std::abs(s) < kPi / 2.0)) domain_error("pdf_crossing_s", s);
  s = std::abs(s);
  if (s == 0.0) return 4.0 / kPi2;
  // cot(s) log((1 + sin s)/(1 - sin s)) = 2 atanh(sin s) / tan s, and
  // atanh(sin s) = asinh(tan s) stays finite up to pi/2
  const double t = std::tan(s);
  return 4.0 / kPi2 * std::asinh(t) / t;
}

double axes_cross_probability_quadrature() {
  // S, T iid with density F = pdf_crossing_s. The uniform third variable is
  // integrated out exactly: P = E[(pi - |S+T| - |S-T|)_+] / pi, and by
  // symmetry this is 4 int int_{[0,pi/2]^2} F(s) F(t) (1 - 2 max(s,t)/pi).
  const double half = kPi / 2.0;
  auto outer = [half](double s) {
    const double below = quad::integrate([](double t) { return pdf_crossing_s(t); }, 0.0, s, {}, 1e-13);
    const double above =
        quad::integrate([](double t) { return pdf_crossing_s(t) * (1.0 - 2.0 * t / kPi); }, s, half, {}, 1e-13);
    return pdf_crossing_s(s) * (below * (1.0 - 2.0 * s / kPi) + above);
  };
  return 4.0 * quad::integrate(outer, 0.0, half, {}, 1e-12);
}

DensityFn pdf_convolve(const DensityFn& d1, const DensityFn& d2) {
  if (std::isinf(d1.lo) || std::isinf(d2.lo))
    throw Error(ErrorCode::InvalidArgument, "convolution needs bounded-below densities");
  DensityFn out;
  out.name = d1.name + "*" + d2.name;
  out.lo = d1.lo + d2.lo;
  out.hi = d1.hi + d2.hi;
  // the sum can only kink where an endpoint or singular point of one density
  // meets one of the other
  std::vector<double> p1 = d1.singular_points, p2 = d2.singular_points;
  p1.push_back(d1.lo);
  p2.push_back(d2.lo);
  if (std::isfinite(d1.hi)) p1.push_back(d1.hi);
  if (std::isfinite(d2.hi)) p2.push_back(d2.hi);
  for (double p : p1)
    for (double q : p2)
      if (p + q > out.lo && p + q < out.hi) out.singular_points.push_back(p + q);
  std::sort(out.singular_points.begin(), out.singular_points.end());
  out.singular_points.erase(std::unique(out.singular_points.begin(), out.singular_points.end()),
                            out.singular_points.end());
  out.eval = [d1, d2](double x) {
    const double from = std::max(d1.lo, x - d2.hi);
    const double to = std::min(d1.hi, x - d2.lo);
    if (!(from < to)) return 0.0;
    std::vector<double> breaks = d1.singular_points;
    for (double q : d2.singular_points) breaks.push_back(x - q);
    auto integrand = [&](double y) {
      if (!d1.contains(y) || !d2.contains(x - y)) return 0.0;
      return d1(y) * d2(x - y);
    };
    return quad::integrate(integrand, from, to, breaks, 1e-10);
  };
  return out;
}

double total_mass(const DensityFn& d) {
  return quad::integrate(d.eval, d.lo, d.hi, d.singular_points, 1e-12);
}

double CdfTable::operator()(double x) const {
  if (grid.empty() || x <= grid.front()) return 0.0;
  if (x >= grid.back()) return values.back();
  const auto it = std::upper_bound(grid.begin(), grid.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - grid.begin());
  const double t = (x - grid[i - 1]) / (grid[i] - grid[i - 1]);
  return values[i - 1] + t * (values[i] - values[i - 1]);
}

CdfTable cdf_of(const DensityFn& d, std::size_t cells) {
  if (std::isinf(d.lo)) throw Error(ErrorCode::InvalidArgument, "cdf_of needs a bounded-below density");
  if (cells < 16) cells = 16;
  std::vector<double> grid;
  const bool infinite = std::isinf(d.hi);
  for (std::size_t k = 0; k < cells; ++k) {
    const double t = static_cast<double>(k) / cells;
    if (infinite) {
      const double r = t / (1.0 - t);
      grid.push_back(d.lo + r * r);
    } else {
      grid.push_back(d.lo + (d.hi - d.lo) * (1.0 - std::cos(kPi * t)) / 2.0);
    }
  }
  if (!infinite) grid.push_back(d.hi);
  // resolve the logarithmic corners at the lower end and at singular points
  std::vector<double> anchors = d.singular_points;
  anchors.push_back(d.lo);
  for (double p : anchors) {
    if (p != d.lo) grid.push_back(p);
    for (int e = 1; e <= 12; ++e) {
      const double h = std::pow(10.0, -e);
      grid.push_back(p + h);
      if (p != d.lo) grid.push_back(p - h);
    }
  }
  std::erase_if(grid, [&](double x) { return x < d.lo || x > d.hi; });
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  CdfTable out;
  out.grid = grid;
  out.values.assign(grid.size(), 0.0);
  double acc = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    acc += quad::integrate(d.eval, grid[i - 1], grid[i], {}, 1e-10);
    out.values[i] = std::min(acc, 1.0);
  }
  if (infinite) {
    acc += quad::integrate(d.eval, grid.back(), kInf, {}, 1e-10);
    out.grid.push_back(kInf);
    out.values.push_back(std::min(acc, 1.0));
  }
  return out;
}

namespace {

DensityFn make(std::string name, double lo, double hi, std::function<double(double)> eval,
               std::vector<double> singular = {}) {
  return DensityFn{std::move(name), lo, hi, std::move(eval), std::move(singular)};
}

} // namespace

DensityFn density(std::string_view name) {
  if (name == "abs-a") return make("abs-a", 1.0, kInf, pdf_abs_a);
  if (name == "f0") return make("f0", 0.0, 1.0, pdf_f0);
  if (name == "ratio-x") return make("ratio-x", 0.0, 1.0, pdf_ratio_x);
  if (name == "half-angle") return make("half-angle", 0.0, kPi / 2.0, pdf_half_angle);
  if (name == "half-angle-sum") {
    DensityFn d = pdf_convolve(density("half-angle"), density("half-angle"));
    d.name = "half-angle-sum";
    return d;
  }
  if (name == "trace") return make("trace", 0.0, kInf, pdf_trace, {2.0});
  if (name == "beta") return make("beta", -4.0, kInf, pdf_beta, {0.0});
  if (name == "w") return make("w", 0.0, kInf, pdf_w, {1.0});
  if (name == "tau") return make("tau", 0.0, kInf, pdf_translation_length);
  if (name == "min-gap") return make("min-gap", 0.0, kPi, min_gap_pdf);
  if (name == "crossing-s") return make("crossing-s", -kPi / 2.0, kPi / 2.0, pdf_crossing_s);
  if (name == "uniform-circle")
    return make("uniform-circle", 0.0, 2.0 * kPi, [](double) { return 1.0 / (2.0 * kPi); });
  if (name == "uniform-circle-sum") {
    DensityFn d = pdf_convolve(density("uniform-circle"), density("uniform-circle"));
    d.name = "uniform-circle-sum";
    return d;
  }
  constexpr std::string_view ih = "irwin-hall-";
  if (name.starts_with(ih)) {
    const std::string digits(name.substr(ih.size()));
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == digits.size() && m >= 1 && m <= 40) {
      std::vector<double> knots;
      for (int k = 1; k < m; ++k) knots.push_back(k);
      return make(std::string(name), 0.0, m, [m](double x) { return irwin_hall_pdf(m, x); }, knots);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown density '" + std::string(name) + "'");
}

std::vector<std::string> density_names() {
  return {"abs-a", "f0",  "ratio-x", "half-angle", "half-angle-sum", "trace",          "beta",
          "w",     "tau", "min-gap", "crossing-s", "uniform-circle", "uniform-circle-sum", "irwin-hall-<m>"};
}

} // namespace rfg::analytic

#pragma once
// Closed-form densities, expectations and special functions of the random
// Moebius model. They serve as the oracles for the Monte Carlo harness.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rfg::analytic {

/// Li2(x) = sum x^n / n^2 on [-1, 1]; DomainError outside.
double dilog(double x);

/// Density of |a| on (1, inf): 2 / (pi x sqrt(x^2 - 1)).
double pdf_abs_a(double x);
/// Density of |f(0)| on [0, 1): 2 / (pi sqrt(1 - y^2)).
double pdf_f0(double y);
double expected_f0();
/// Hyperbolic distance from 0 to the point at the mean |f(0)|:
/// log((pi + 2) / (pi - 2)).
double f0_plugin_distance();

/// Density of sin(theta) / cos(alpha) given the ratio is below 1, on (0, 1).
double pdf_ratio_x(double x);
/// Density of half the angle subtended at 0 by the fixed points of a random
/// hyperbolic element, on (0, pi/2).
double pdf_half_angle(double eta);

/// (4 / pi^2) (Li2(tanh r) - Li2(-tanh r)): probability that the axis of a
/// random hyperbolic element meets the disk of hyperbolic radius r about 0.
double prob_axis_meets_disk(double r);

/// Density of |tr| = 2 |Re a| on (0, inf), singular at 2.
double pdf_trace(double s);
/// The s > 2 branch written as (4 / (pi^2 s)) arccosh(s / sqrt(s^2 - 4)).
double pdf_trace_arccosh(double s);
/// Density of beta = tr^2 - 4 on (-4, inf), singular at -4 and 0.
double pdf_beta(double b);
/// Density of w = (beta + 4) / 4 on (0, inf), singular at 1.
double pdf_w(double w);

/// Density of the translation length of a random hyperbolic element, (0, inf).
double pdf_translation_length(double tau);
double expected_translation_length();

/// Irwin-Hall density of the sum of m uniforms, x in [0, m].
double irwin_hall_pdf(int m, double x);

struct EqualArcsProbability {
  /// P(all gaps between 2n uniform points exceed the common arc length),
  /// which is the integral of (1 - n u)_+^(2n-1) over u in [0, 1], i.e. 1/(2n^2).
  double exact = 0.0;
  /// (1/(2n)) * int_0^1 int_0^{2-t} IH_{2n-1}(x) dx dt.
  double irwin_hall_route = 0.0;
  /// 1/((2n) n!) * int_0^1 sum_k (-1)^k C(n,k) (2-x-k)^n dx.
  double prefactor_formula = 0.0;
};
/// Probability that n pairs of arcs with uniform midpoints and a common
/// length uniform on [0, pi] are pairwise disjoint. Requires n >= 1.
EqualArcsProbability prob_equal_arcs_disjoint(int n);

/// P(min gap >= psi) = (1 - psi/pi)^4 for the four midpoints of two arc pairs.
double min_gap_survival(double psi);
double min_gap_pdf(double psi);
double expected_min_gap();

/// Density of S on [-pi/2, pi/2] in the crossing-axes computation:
/// (2/pi^2) cot(s) log((1 + sin s) / (1 - sin s)).
double pdf_crossing_s(double s);
/// P(axes of two random hyperbolic elements cross) by nested quadrature.
double axes_cross_probability_quadrature();

struct DensityFn {
  std::string name;
  double lo = 0.0;
  double hi = 0.0; ///< may be +infinity
  std::function<double(double)> eval;
  /// Interior points where the density diverges or has a kink.
  std::vector<double> singular_points;

  double operator()(double x) const { return eval(x); }
  bool contains(double x) const { return x > lo && x < hi; }
};

/// Named densities: abs-a, f0, ratio-x, half-angle, half-angle-sum, trace,
/// beta, w, tau, min-gap, crossing-s, uniform-circle, uniform-circle-sum,
/// irwin-hall-<m>. Throws InvalidArgument for an unknown name.
DensityFn density(std::string_view name);
std::vector<std::string> density_names();

/// Density of X + Y for independent X ~ d1, Y ~ d2, evaluated by quadrature.
DensityFn pdf_convolve(const DensityFn& d1, const DensityFn& d2);

/// Integral of the density over its domain.
double total_mass(const DensityFn& d);

struct CdfTable {
  std::vector<double> grid;
  std::vector<double> values;
  /// Linear interpolation, 0 below the grid and 1 above it.
  double operator()(double x) const;
};
CdfTable cdf_of(const DensityFn& d, std::size_t cells = 8192);

} // namespace rfg::analytic

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rfg/analytic.hpp"
#include "rfg/error.hpp"
#include "rfg/sampling.hpp"
#include "rfg/stats.hpp"

using namespace rfg;
using std::numbers::pi;

namespace {

analytic::CdfTable uniform_cdf(double lo, double hi) { return {{lo, hi}, {0.0, 1.0}}; }

double wrap(double t) {
  t = std::fmod(t, 2 * pi);
  return t < 0 ? t + 2 * pi : t;
}

} // namespace

TEST_CASE("inverse-transform map") {
  const MobiusTransform f = draw_from_uniforms(0.0, 0.0, 0.5).to_mobius();
  CHECK(f.a().real() == doctest::Approx(std::numbers::sqrt2));
  CHECK(f.a().imag() == doctest::Approx(0.0));
  CHECK(f.c().real() == doctest::Approx(1.0));
  CHECK(f.c().imag() == doctest::Approx(0.0));

  const MobiusTransform r = draw_from_uniforms(0.0, 0.0, 1.0).to_mobius();
  CHECK(std::abs(r.a()) == doctest::Approx(1.0));
  CHECK(std::abs(r.c()) == doctest::Approx(0.0));

  CHECK_THROWS_AS(draw_from_uniforms(0.1, 0.2, 0.0), Error);
}

TEST_CASE("disk form") {
  const DiskParametrization w0 = disk_form_from_uniforms(0.25, 0.5, 1.0);
  CHECK(std::abs(w0.w) < 1e-15);
  CHECK(classify(w0.to_mobius()).kind == Kind::Elliptic);
  CHECK_THROWS_AS(disk_form_from_uniforms(0.1, 0.2, 0.0), Error);

  const DiskParametrization d = disk_form_from_uniforms(0.1, 0.3, 0.4);
  CHECK(std::abs(apply(d.to_mobius(), 0.0)) == doctest::Approx(std::abs(d.w)));

  Stream s(21, 0);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) sum += std::abs(apply(sample_mobius_disk_form(s).to_mobius(), 0.0));
  CHECK(sum / n == doctest::Approx(2.0 / pi).epsilon(0.004));
}

TEST_CASE("sampler determinism") {
  Stream a(5, 2), b(5, 2);
  for (int i = 0; i < 100; ++i) CHECK(sample_mobius(a) == sample_mobius(b));
}

TEST_CASE("|a| follows its density") {
  Stream s(22, 0);
  std::vector<double> xs;
  for (int i = 0; i < 100000; ++i) xs.push_back(std::abs(sample_mobius(s).a()));
  const KsResult ks = ks_test(xs, analytic::cdf_of(analytic::density("abs-a")));
  CHECK(ks.pass);
}

TEST_CASE("hyperbolic sampler") {
  Stream s(23, 0);
  std::vector<double> betas;
  for (int i = 0; i < 50000; ++i) {
    const MobiusTransform f = sample_hyperbolic(s);
    REQUIRE(beta(f) > 0.0);
    betas.push_back(beta(f));
  }
  // beta restricted to (0, inf) has half the mass of its density there
  const analytic::DensityFn d = analytic::density("beta");
  analytic::DensityFn positive{"beta+", 0.0, INFINITY, [d](double b) { return 2.0 * d(b); }, {}};
  CHECK(ks_test(betas, analytic::cdf_of(positive)).pass);

  Stream t(24, 0);
  int hyperbolic = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) hyperbolic += beta(sample_mobius(t)) > 0.0;
  CHECK(static_cast<double>(hyperbolic) / n == doctest::Approx(0.5).epsilon(0.008));
}

TEST_CASE("parabolic sampler") {
  const ArcPair pair = parabolic_arcs_from_uniforms(0.1, 0.3);
  const auto [a, c] = arc_pair_entries(pair);
  CHECK(a.real() == doctest::Approx(-1.0));

  Stream s(25, 0);
  std::vector<double> tangency;
  for (int i = 0; i < 100000; ++i) {
    const MobiusTransform f = sample_parabolic(s);
    REQUIRE(classify(f).kind == Kind::Parabolic);
    tangency.push_back(wrap(std::arg(fixed_points(f).z_plus)));
  }
  CHECK(ks_test(tangency, uniform_cdf(0.0, 2 * pi)).pass);
}

TEST_CASE("arc sampler") {
  Stream s(26, 0);
  std::vector<double> mids, half, full;
  for (int i = 0; i < 50000; ++i) {
    const Arc h = sample_arc(s, ArcSupport::HalfTurn);
    const Arc f = sample_arc(s, ArcSupport::FullTurn);
    mids.push_back(wrap(h.mid_arg()));
    half.push_back(h.length);
    full.push_back(f.length);
  }
  CHECK(ks_test(mids, uniform_cdf(0.0, 2 * pi)).pass);
  CHECK(ks_test(half, uniform_cdf(0.0, pi)).pass);
  CHECK(ks_test(full, uniform_cdf(0.0, 2 * pi)).pass);
}

TEST_CASE("uniform argument algebra") {
  Stream s(27, 0);
  std::vector<double> prod, quot;
  for (int i = 0; i < 100000; ++i) {
    // raw angles: the canonical sign folds arg a onto a half circle
    const double a = sample_draw(s).arg_a;
    const double b = sample_draw(s).arg_a;
    prod.push_back(wrap(a + b));
    quot.push_back(wrap(a - b));
  }
  CHECK(ks_test(prod, uniform_cdf(0.0, 2 * pi)).pass);
  CHECK(ks_test(quot, uniform_cdf(0.0, 2 * pi)).pass);
}

TEST_CASE("rotation invariance of scalar statistics") {
  Stream s(28, 0);
  const MobiusTransform r = MobiusTransform::rotation(1.1);
  std::vector<double> rotated;
  for (int i = 0; i < 50000; ++i) {
    const MobiusTransform f = compose(r, sample_mobius(s));
    rotated.push_back(std::abs(f.a()));
  }
  CHECK(ks_test(rotated, analytic::cdf_of(analytic::density("abs-a"))).pass);
}

TEST_CASE("fixed-point half angle") {
  Stream s(29, 0);
  std::vector<double> eta;
  for (int i = 0; i < 100000; ++i) {
    const FixedPoints fp = fixed_points(sample_hyperbolic(s));
    eta.push_back(std::abs(std::arg(fp.z_plus * std::conj(fp.z_minus))) / 2.0);
  }
  CHECK(ks_test(eta, analytic::cdf_of(analytic::density("half-angle"))).pass);
}

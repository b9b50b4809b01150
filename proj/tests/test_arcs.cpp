#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rfg/arcs.hpp"
#include "rfg/error.hpp"
#include "rfg/rng.hpp"
#include "rfg/sampling.hpp"

using namespace rfg;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

const Complex I{0.0, 1.0};

Complex unit(double t) { return std::polar(1.0, t); }

} // namespace

TEST_CASE("arc disjointness") {
  CHECK(arcs_disjoint(Arc::from_angle(0.0, pi / 2), Arc::from_angle(pi, pi / 2)));
  CHECK_FALSE(arcs_disjoint(Arc::from_angle(0.0, pi), Arc::from_angle(pi / 2, pi)));
  // tangent arcs meet
  CHECK_FALSE(arcs_disjoint(Arc::from_angle(0.0, pi / 2), Arc::from_angle(pi / 2, pi / 2)));
  CHECK(angular_gap(Arc::from_angle(3.0, 0.1), Arc::from_angle(-3.0, 0.1)) == doctest::Approx(2 * pi - 6.0));

  std::vector<Arc> four;
  for (int k = 0; k < 4; ++k) four.push_back(Arc::from_angle(k * pi / 2, pi / 4));
  CHECK(all_disjoint(four));
  four.push_back(four[2]);
  CHECK_FALSE(all_disjoint(four));
  CHECK(all_disjoint(std::vector<Arc>{}));
}

TEST_CASE("arcs to transform") {
  // the first arc is cut by C+, so (-1, 1) gives (sqrt2, 1) and the swapped
  // pair its inverse (sqrt2, -1)
  const MobiusTransform f = arcs_to_mobius(ArcPair::make(-1.0, 1.0, pi / 2));
  CHECK(approx_equal(f, MobiusTransform::build(sqrt2, 1.0)));
  CHECK(approx_equal(arcs_to_mobius(ArcPair::make(1.0, -1.0, pi / 2)), MobiusTransform::build(sqrt2, -1.0)));

  // (sqrt2, -1): isometric circle centers at +-sqrt2, arcs at -+1
  const ArcPair back = mobius_to_arcs(MobiusTransform::build(sqrt2, -1.0));
  CHECK(same_pair(back, ArcPair::make(-1.0, 1.0, pi / 2)));

  // adjacent arcs give Re a = -1 before canonicalization, hence parabolic
  for (double l : {0.3, 1.0, 2.5, 4.0, 6.0}) {
    const ArcPair pair = ArcPair::make(unit(0.7), unit(0.7 + l), l);
    const auto [a, c] = arc_pair_entries(pair);
    CHECK(a.real() == doctest::Approx(-1.0));
    CHECK(a.imag() == doctest::Approx(1.0 / std::tan(l / 2)).epsilon(1e-12));
    CHECK(std::abs(beta(arcs_to_mobius(pair))) < 1e-9);
  }

  // overlapping arcs of length below pi: elliptic
  Stream s(11, 0);
  for (int i = 0; i < 1000; ++i) {
    const double l = pi * s.uniform_positive();
    const double gap = l * s.uniform_positive();
    const double m = 2 * pi * s.uniform();
    const double b = beta(arcs_to_mobius(ArcPair::make(unit(m), unit(m + gap), l)));
    CHECK(b >= -4.0);
    CHECK(b < 0.0);
  }

  CHECK_THROWS_AS(arcs_to_mobius(ArcPair::make(1.0, I, 0.0)), Error);
  CHECK_THROWS_AS(arcs_to_mobius(ArcPair::make(1.0, 1.0, 1.0)), Error);
}

TEST_CASE("round trip up to inversion") {
  Stream s(12, 0);
  int swapped = 0;
  for (int i = 0; i < 20000; ++i) {
    const MobiusTransform f = sample_mobius(s);
    const ArcPair pair = mobius_to_arcs(f);
    const MobiusTransform g = arcs_to_mobius(pair);
    const bool same = approx_equal(f, g, 1e-8 * std::max(1.0, std::abs(f.a())));
    const bool inv = approx_equal(inverse(f), g, 1e-8 * std::max(1.0, std::abs(f.a())));
    CHECK((same || inv));
    if (!same) ++swapped;
    // the swapped pair is the inverse
    const MobiusTransform h = arcs_to_mobius(ArcPair{pair.second, pair.first, pair.common_length});
    CHECK(approx_equal(compose(g, h), MobiusTransform::identity(), 1e-7 * std::norm(f.a())));
  }
  CHECK(swapped == 0);
}

TEST_CASE("isometric arcs disjoint iff hyperbolic") {
  Stream s(13, 0);
  for (int i = 0; i < 5000; ++i) {
    const MobiusTransform f = sample_mobius(s);
    const ArcPair pair = mobius_to_arcs(f);
    const double b = beta(f);
    if (std::abs(b) < 1e-6) continue;
    CHECK(arcs_disjoint(pair.first, pair.second) == (b > 0.0));
  }
}

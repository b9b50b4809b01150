#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rfg/arcs.hpp"
#include "rfg/discreteness.hpp"
#include "rfg/error.hpp"
#include "rfg/sampling.hpp"

using namespace rfg;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

const Complex I{0.0, 1.0};

Complex unit(double t) { return std::polar(1.0, t); }

MobiusTransform from_arcs(double m1, double m2, double len) {
  return arcs_to_mobius(ArcPair::make(unit(m1), unit(m2), len));
}

} // namespace

TEST_CASE("ping-pong") {
  const MobiusTransform f = from_arcs(0.0, pi, pi / 8);
  const MobiusTransform g = from_arcs(pi / 2, 3 * pi / 2, pi / 8);
  const MobiusTransform gens[] = {f, g};
  const Verdict v = ping_pong(gens);
  CHECK(v.status == VerdictStatus::DiscreteFreeByPingPong);
  REQUIRE(v.witness);
  CHECK(v.witness->overlapping.empty());
  CHECK(combined_verdict(f, g).status == VerdictStatus::DiscreteFreeByPingPong);

  const MobiusTransform same[] = {f, f};
  const Verdict dup = ping_pong(same);
  CHECK(dup.status == VerdictStatus::Inconclusive);
  CHECK(dup.witness->overlapping.size() == 2);
  CHECK(combined_verdict(f, f).status == VerdictStatus::Inconclusive);
  CHECK(combined_verdict(f, f).witness->elementary);

  // single generators: hyperbolic passes, elliptic does not
  const MobiusTransform one[] = {f};
  CHECK(ping_pong(one).status == VerdictStatus::DiscreteFreeByPingPong);
  const MobiusTransform e[] = {MobiusTransform::build(I * sqrt2, I)};
  CHECK(ping_pong(e).status == VerdictStatus::Inconclusive);

  const MobiusTransform rot[] = {f, MobiusTransform::rotation(0.3)};
  CHECK_THROWS_AS(ping_pong(rot), Error);

  // four generators on 16 equally spaced midpoints
  std::vector<MobiusTransform> many;
  for (int k = 0; k < 4; ++k) many.push_back(from_arcs(k * pi / 4, k * pi / 4 + pi, pi / 16));
  CHECK(ping_pong(many).status == VerdictStatus::DiscreteFreeByPingPong);
}

TEST_CASE("ping-pong with tangency") {
  const MobiusTransform p = from_arcs(0.0, pi / 4, pi / 4);
  const MobiusTransform q = from_arcs(pi, 5 * pi / 4, pi / 4);
  REQUIRE(classify(p).kind == Kind::Parabolic);
  REQUIRE(classify(q).kind == Kind::Parabolic);
  const MobiusTransform gens[] = {p, q};
  const Verdict v = ping_pong(gens);
  CHECK(v.status == VerdictStatus::DiscreteByPingPongWithTangency);
  CHECK(v.witness->tangent.size() == 2);
  CHECK(v.witness->overlapping.empty());
  CHECK(combined_verdict(p, q).status == VerdictStatus::DiscreteByPingPongWithTangency);

  // tangency between arcs of different generators is an overlap
  const MobiusTransform h1 = from_arcs(0.0, pi, pi / 2);
  const MobiusTransform h2 = from_arcs(pi / 2, 3 * pi / 2, pi / 2);
  const MobiusTransform touching[] = {h1, h2};
  CHECK(ping_pong(touching).status == VerdictStatus::Inconclusive);
}

TEST_CASE("Jorgensen") {
  const MobiusTransform f = MobiusTransform::build(sqrt2, 1.0);
  const MobiusTransform g = MobiusTransform::build(I * sqrt2, I);
  CHECK(jorgensen_value(f, g) == doctest::Approx(8.0));
  CHECK_FALSE(jorgensen_fails(f, g));
  CHECK(jorgensen_value(f, MobiusTransform::identity()) == doctest::Approx(4.0));

  // near-identity elliptic with a hyperbolic partner
  const MobiusTransform near_id = MobiusTransform::build(std::cosh(0.1) * unit(0.1), std::sinh(0.1));
  REQUIRE(std::abs(beta(near_id)) < 0.2);
  REQUIRE_FALSE(shares_fixed_point(near_id, f));
  CHECK(jorgensen_fails(near_id, f));
  const Verdict v = combined_verdict(near_id, f);
  CHECK(v.status == VerdictStatus::NotDiscreteByJorgensen);
  REQUIRE(v.witness);
  CHECK(*v.witness->jorgensen_value < 1.0);
}

TEST_CASE("gamma interval") {
  const MobiusTransform f = MobiusTransform::build(sqrt2, 1.0);
  CHECK(gamma_interval_flag(f, f));
  CHECK_FALSE(gamma_interval_flag(f, MobiusTransform::build(I * sqrt2, I)));
}

TEST_CASE("almost surely not discrete") {
  Stream s(31, 0);
  int found = 0;
  for (int i = 0; i < 2000 && found < 50; ++i) {
    const MobiusTransform f = sample_hyperbolic(s);
    const MobiusTransform g = sample_hyperbolic(s);
    const double gm = gamma(f, g);
    if (!(gm > -4.0 && gm < 0.0) || jorgensen_fails(f, g)) continue;
    const MobiusTransform gens[] = {f, g};
    if (ping_pong(gens).status != VerdictStatus::Inconclusive) continue;
    ++found;
    const Verdict v = combined_verdict(f, g);
    CHECK(v.status == VerdictStatus::AlmostSurelyNotDiscrete);
    CHECK(*v.witness->gamma == doctest::Approx(gm));
    CHECK_FALSE(v.witness->overlapping.empty());
  }
  CHECK(found == 50);
}

TEST_CASE("verdicts are invariant under rotation") {
  Stream s(32, 0);
  for (int i = 0; i < 3000; ++i) {
    const MobiusTransform f = sample_mobius(s);
    const MobiusTransform g = sample_mobius(s);
    const Verdict v = combined_verdict(f, g);
    CHECK((v.status == VerdictStatus::Inconclusive || v.witness.has_value()));
    const MobiusTransform r = MobiusTransform::rotation(2 * pi * s.uniform());
    CHECK(combined_verdict(conjugate(r, f), conjugate(r, g)).status == v.status);
  }
}

TEST_CASE("status names") {
  CHECK(verdict_status_name(VerdictStatus::DiscreteFreeByPingPong) == "DiscreteFreeByPingPong");
  CHECK(verdict_status_name(VerdictStatus::Inconclusive) == "Inconclusive");
}

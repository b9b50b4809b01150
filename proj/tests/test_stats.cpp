#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rfg/error.hpp"
#include "rfg/rng.hpp"
#include "rfg/serialize.hpp"
#include "rfg/stats.hpp"

using namespace rfg;

TEST_CASE("estimates") {
  const Measurement m = event_estimate("e", 250, 1000);
  CHECK(m.p_hat == doctest::Approx(0.25));
  CHECK(m.std_err == doctest::Approx(std::sqrt(0.25 * 0.75 / 1000)));

  Measurement t = m;
  assert_target(t, 0.26, 0.02, "ref");
  CHECK(t.pass);
  CHECK(std::abs(t.sigma_distance) == doctest::Approx(0.01 / m.std_err));
  assert_target(t, 0.3, 0.02, "ref");
  CHECK_FALSE(t.pass);

  const Measurement mean = mean_estimate("m", 10.0, 30.0, 5);
  CHECK(mean.p_hat == doctest::Approx(2.0));
  // sample variance (30 - 5 * 4) / 4 = 2.5
  CHECK(mean.std_err == doctest::Approx(std::sqrt(2.5 / 5)));
}

TEST_CASE("Kolmogorov-Smirnov") {
  const analytic::CdfTable uniform{{0.0, 1.0}, {0.0, 1.0}};
  Stream s(41, 0);
  std::vector<double> u;
  for (int i = 0; i < 100000; ++i) u.push_back(s.uniform());
  const KsResult ok = ks_test(u, uniform);
  CHECK(ok.pass);
  CHECK(ok.n == 100000);
  CHECK(ok.statistic * std::sqrt(100000.0) < kKsThreshold);

  std::vector<double> squared;
  for (double x : u) squared.push_back(x * x);
  CHECK_FALSE(ks_test(squared, uniform).pass);

  // exact statistic on a tiny sample
  const std::vector<double> three{0.1, 0.5, 0.6};
  CHECK(ks_test(three, uniform).statistic == doctest::Approx(0.4));
}

TEST_CASE("histograms") {
  Histogram h = Histogram::uniform(0.0, 1.0, 4);
  CHECK(h.edges.size() == 5);
  h.add(-0.1);
  h.add(0.1);
  h.add(0.3);
  h.add(0.99);
  h.add(1.5);
  CHECK(h.counts == std::vector<std::uint64_t>{1, 1, 0, 1});
  CHECK(h.underflow == 1);
  CHECK(h.overflow == 1);
  CHECK(h.total() == 5);

  Histogram g = Histogram::uniform(0.0, 1.0, 4);
  g.add(0.6);
  h.merge(g);
  CHECK(h.counts[2] == 1);

  const std::vector<double> xs{0.5, 1.5, 2.5, 2.6};
  const Histogram k = histogram(xs, {0.0, 1.0, 2.0, 3.0});
  CHECK(k.counts == std::vector<std::uint64_t>{1, 1, 2});
}

TEST_CASE("fixed-point sums are order independent") {
  Stream s(42, 0);
  std::vector<double> xs;
  for (int i = 0; i < 10000; ++i) xs.push_back(std::exp(20 * s.uniform() - 10) * (s.uniform() < 0.5 ? -1 : 1));
  FixedSum forward, backward, left, right;
  for (double x : xs) forward.add(x);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) backward.add(*it);
  for (std::size_t i = 0; i < xs.size(); ++i) (i % 3 == 0 ? left : right).add(xs[i]);
  right.merge(left);
  CHECK(forward.value() == backward.value());
  CHECK(forward.value() == right.value());
  double plain = 0.0;
  for (double x : xs) plain += x;
  CHECK(forward.value() == doctest::Approx(plain).epsilon(1e-12));
}

TEST_CASE("json records") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(INFINITY) == "null");
  CHECK(json_string("a\"b") == "\"a\\\"b\"");

  const MobiusTransform f = MobiusTransform::build(Complex(1.2, 0.3), Complex(0.5, -0.6) * std::sqrt(0.53 / 0.61));
  const MobiusTransform g = mobius_from_json(mobius_to_json(f));
  CHECK(g == f);

  const auto all = mobius_from_jsonl(mobius_to_json(f) + "\n\n" + mobius_to_json(inverse(f)) + "\n");
  CHECK(all.size() == 2);

  CHECK(arc_to_json(Arc::from_angle(0.5, 1.0)) == "{\"mid_arg\":0.5,\"len\":1}");

  auto code = [](const char* line) {
    try {
      mobius_from_json(line);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code("{not json") == ErrorCode::ParseError);
  CHECK(code("{\"a_re\":1}") == ErrorCode::ParseError);
  CHECK(code("{\"a_re\":1,\"a_im\":0,\"c_re\":1,\"c_im\":0}") == ErrorCode::NotInGroup);
}

// Exercises the shared library through rfg.h only.
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "rfg/rfg.h"

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kPi = 3.14159265358979323846;

std::string take(char* s) {
  std::string out = s ? s : "";
  rfg_string_free(s);
  return out;
}

} // namespace

TEST_CASE("transforms") {
  rfg_mobius f{};
  REQUIRE(rfg_mobius_build({kSqrt2, 0}, {1, 0}, &f) == RFG_OK);
  rfg_kind kind{};
  double beta = 0, tau = 0;
  CHECK(rfg_mobius_classify(&f, &kind, &beta, &tau) == RFG_OK);
  CHECK(kind == RFG_HYPERBOLIC);
  CHECK(beta == doctest::Approx(4.0));
  CHECK(tau == doctest::Approx(std::acosh(3.0)));

  rfg_complex z{};
  CHECK(rfg_mobius_apply(&f, {1, 0}, &z) == RFG_OK);
  CHECK(z.re == doctest::Approx(1.0));

  rfg_mobius inv{}, id{};
  CHECK(rfg_mobius_inverse(&f, &inv) == RFG_OK);
  CHECK(rfg_mobius_compose(&f, &inv, &id) == RFG_OK);
  CHECK(id.a.re == doctest::Approx(1.0));
  CHECK(std::abs(id.c.re) < 1e-12);

  rfg_mobius g{};
  REQUIRE(rfg_mobius_build({0, kSqrt2}, {0, 1}, &g) == RFG_OK);
  double gamma = 0;
  CHECK(rfg_mobius_gamma(&f, &g, &gamma) == RFG_OK);
  CHECK(gamma == doctest::Approx(4.0));

  rfg_complex plus{}, minus{};
  CHECK(rfg_mobius_fixed_points(&f, &plus, &minus) == RFG_OK);
  CHECK(plus.re == doctest::Approx(1.0));
  rfg_mobius rot{};
  REQUIRE(rfg_mobius_build({0, 1}, {0, 0}, &rot) == RFG_OK);
  CHECK(rfg_mobius_fixed_points(&rot, &plus, &minus) == RFG_ROTATION_CENTER);
  CHECK(std::isinf(minus.re));

  rfg_arc a1{}, a2{};
  CHECK(rfg_mobius_isometric_arcs(&f, &a1, &a2) == RFG_OK);
  CHECK(a1.length == doctest::Approx(kPi / 2));

  rfg_complex x{};
  CHECK(rfg_cross_ratio({1, 0}, {0, 1}, {-1, 0}, {0, -1}, &x) == RFG_OK);
  CHECK(x.re == doctest::Approx(2.0));
}

TEST_CASE("errors") {
  rfg_mobius f{};
  CHECK(rfg_mobius_build({1, 0}, {1, 0}, &f) == RFG_NOT_IN_GROUP);
  CHECK(std::strlen(rfg_last_error_message()) > 0);
  CHECK(std::string(rfg_status_name(RFG_NOT_IN_GROUP)) == "NotInGroup");

  double v = 0;
  CHECK(rfg_dilog(2.0, &v) == RFG_DOMAIN_ERROR);
  CHECK(rfg_dilog(1.0, &v) == RFG_OK);
  CHECK(v == doctest::Approx(kPi * kPi / 6));

  rfg_density* d = nullptr;
  CHECK(rfg_density_create("nope", &d) == RFG_INVALID_ARGUMENT);
  CHECK(d == nullptr);

  rfg_report* r = nullptr;
  CHECK(rfg_experiment_run("nope", 1000, 1, 4, 1, &r) == RFG_UNKNOWN_EXPERIMENT);
  CHECK(rfg_experiment_run("chords-cross", 10, 1, 4, 1, &r) == RFG_INVALID_ARGUMENT);
  CHECK(rfg_mobius_from_json("{", &f) == RFG_PARSE_ERROR);
  CHECK(rfg_mobius_build({1, 0}, {0, 0}, nullptr) == RFG_INVALID_ARGUMENT);
}

TEST_CASE("arcs and streams") {
  rfg_mobius f{};
  REQUIRE(rfg_arcs_to_mobius(kPi, 0.0, kPi / 2, &f) == RFG_OK);
  rfg_arc a{}, b{};
  CHECK(rfg_mobius_to_arcs(&f, &a, &b) == RFG_OK);
  CHECK(std::abs(std::abs(a.mid_arg) - kPi) < 1e-12);
  CHECK(b.mid_arg == doctest::Approx(0.0));
  int disjoint = -1;
  CHECK(rfg_arcs_disjoint(a, b, &disjoint) == RFG_OK);
  CHECK(disjoint == 1);

  rfg_stream *s1 = nullptr, *s2 = nullptr;
  REQUIRE(rfg_stream_create(42, 3, &s1) == RFG_OK);
  REQUIRE(rfg_stream_create(42, 3, &s2) == RFG_OK);
  for (int i = 0; i < 10; ++i) {
    rfg_mobius x{}, y{};
    CHECK(rfg_sample_mobius(s1, &x) == RFG_OK);
    CHECK(rfg_sample_mobius(s2, &y) == RFG_OK);
    CHECK(std::memcmp(&x, &y, sizeof x) == 0);
  }
  rfg_mobius h{}, p{};
  rfg_kind kind{};
  double beta = 0, tau = 0;
  CHECK(rfg_sample_hyperbolic(s1, &h) == RFG_OK);
  CHECK(rfg_mobius_classify(&h, &kind, &beta, &tau) == RFG_OK);
  CHECK(kind == RFG_HYPERBOLIC);
  CHECK(rfg_sample_parabolic(s1, &p) == RFG_OK);
  CHECK(rfg_mobius_classify(&p, &kind, &beta, &tau) == RFG_OK);
  CHECK(kind == RFG_PARABOLIC);
  rfg_arc arc{};
  CHECK(rfg_sample_arc(s1, 0, &arc) == RFG_OK);
  CHECK(arc.length <= kPi);
  double u = -1;
  CHECK(rfg_stream_uniform(s1, &u) == RFG_OK);
  CHECK((u >= 0 && u < 1));
  rfg_stream_destroy(s1);
  rfg_stream_destroy(s2);
}

TEST_CASE("densities") {
  rfg_density* d = nullptr;
  REQUIRE(rfg_density_create("abs-a", &d) == RFG_OK);
  double v = 0, lo = 0, hi = 0;
  CHECK(rfg_density_eval(d, kSqrt2, &v) == RFG_OK);
  CHECK(v == doctest::Approx(kSqrt2 / kPi));
  CHECK(rfg_density_eval(d, 0.5, &v) == RFG_DOMAIN_ERROR);
  CHECK(rfg_density_domain(d, &lo, &hi) == RFG_OK);
  CHECK(lo == 1.0);
  CHECK(std::isinf(hi));
  rfg_density_destroy(d);

  char* names = nullptr;
  REQUIRE(rfg_density_names(&names) == RFG_OK);
  CHECK(take(names).find("half-angle") != std::string::npos);

  CHECK(rfg_prob_axis_meets_disk(0.678, &v) == RFG_OK);
  CHECK(v == doctest::Approx(0.5).epsilon(0.002));
  double exact = 0, route = 0, formula = 0;
  CHECK(rfg_prob_equal_arcs_disjoint(2, &exact, &route, &formula) == RFG_OK);
  CHECK(exact == doctest::Approx(0.125));
}

TEST_CASE("experiments and reports") {
  rfg_report* r = nullptr;
  REQUIRE(rfg_experiment_run("chords-cross", 50000, 7, 16, 2, &r) == RFG_OK);
  int passed = 0;
  CHECK(rfg_report_passed(r, &passed) == RFG_OK);
  CHECK(passed == 1);
  char* json = nullptr;
  REQUIRE(rfg_report_json(r, &json) == RFG_OK);
  CHECK(take(json).find("\"experiment\":\"chords-cross\"") != std::string::npos);
  char* csv = nullptr;
  CHECK(rfg_report_histogram_csv(r, &csv) == RFG_INVALID_ARGUMENT);
  rfg_report_destroy(r);

  char* list = nullptr;
  REQUIRE(rfg_experiment_list(&list) == RFG_OK);
  CHECK(take(list).find("axes-cross") != std::string::npos);
}

TEST_CASE("verdicts and json") {
  rfg_mobius gens[2]{};
  REQUIRE(rfg_arcs_to_mobius(0.0, kPi, kPi / 8, &gens[0]) == RFG_OK);
  REQUIRE(rfg_arcs_to_mobius(kPi / 2, -kPi / 2, kPi / 8, &gens[1]) == RFG_OK);
  rfg_verdict_status status{};
  char* witness = nullptr;
  REQUIRE(rfg_verdict(gens, 2, &status, &witness) == RFG_OK);
  CHECK(status == RFG_DISCRETE_FREE_BY_PING_PONG);
  CHECK(take(witness).find("\"status\":\"DiscreteFreeByPingPong\"") != std::string::npos);
  CHECK(std::string(rfg_verdict_status_name(status)) == "DiscreteFreeByPingPong");

  char* line = nullptr;
  REQUIRE(rfg_mobius_to_json(&gens[0], &line) == RFG_OK);
  rfg_mobius back{};
  CHECK(rfg_mobius_from_json(take(line).c_str(), &back) == RFG_OK);
  CHECK(back.a.re == gens[0].a.re);
  CHECK(back.c.im == gens[0].c.im);
}

TEST_CASE("acceptance entry point") {
  struct Seen {
    int calls = 0;
    int passed = 0;
  } seen;
  auto cb = [](int criterion, int passed, const char* text, void* user) {
    auto* s = static_cast<Seen*>(user);
    ++s->calls;
    s->passed = passed;
    CHECK(criterion == 4);
    CHECK(std::strstr(text, "criterion") != nullptr);
  };
  int all = 0;
  CHECK(rfg_verify(RFG_LEVEL_QUICK, 4, 42, cb, &seen, &all) == RFG_OK);
  CHECK(seen.calls == 1);
  CHECK(all == 1);
  CHECK(rfg_verify(RFG_LEVEL_QUICK, 13, 42, nullptr, nullptr, &all) == RFG_INVALID_ARGUMENT);
}

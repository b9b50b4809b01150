#include "rfg/rfg.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "rfg/acceptance.hpp"
#include "rfg/analytic.hpp"
#include "rfg/arcs.hpp"
#include "rfg/discreteness.hpp"
#include "rfg/error.hpp"
#include "rfg/experiments.hpp"
#include "rfg/sampling.hpp"
#include "rfg/serialize.hpp"

struct rfg_stream {
  rfg::Stream stream;
};

struct rfg_density {
  rfg::analytic::DensityFn fn;
};

struct rfg_report {
  std::vector<rfg::mc::ExperimentResult> results;
  bool single = false;
};

namespace {

thread_local std::string last_error;

rfg_status fail(rfg_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class Fn>
rfg_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const rfg::Error& e) {
    return fail(static_cast<rfg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RFG_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RFG_INTERNAL, e.what());
  } catch (...) {
    return fail(RFG_INTERNAL, "unknown exception");
  }
}

#define RFG_REQUIRE(ptr)                                                                                          \
  do {                                                                                                            \
    if ((ptr) == nullptr) return fail(RFG_INVALID_ARGUMENT, #ptr " must not be null");                            \
  } while (0)

rfg::Complex to_cpp(rfg_complex z) { return {z.re, z.im}; }
rfg_complex to_c(rfg::Complex z) { return {z.real(), z.imag()}; }

rfg::MobiusTransform to_cpp(const rfg_mobius& f) { return rfg::MobiusTransform::build(to_cpp(f.a), to_cpp(f.c)); }
rfg_mobius to_c(const rfg::MobiusTransform& f) { return {to_c(f.a()), to_c(f.c())}; }

rfg::Arc to_cpp(rfg_arc a) { return rfg::Arc::from_angle(a.mid_arg, a.length); }
rfg_arc to_c(const rfg::Arc& a) { return {a.mid_arg(), a.length}; }

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string arc_ref_json(const rfg::ArcRef& r) {
  return "{\"generator\":" + std::to_string(r.generator) + ",\"arc\":\"" + (r.plus ? "plus" : "minus") + "\"}";
}

std::string pairs_json(const std::vector<std::pair<rfg::ArcRef, rfg::ArcRef>>& pairs) {
  std::string out = "[";
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out += (i ? ",[" : "[") + arc_ref_json(pairs[i].first) + "," + arc_ref_json(pairs[i].second) + "]";
  return out + "]";
}

std::string verdict_json(const rfg::Verdict& v) {
  std::string out = "{\"status\":" + rfg::json_string(rfg::verdict_status_name(v.status)) + ",\"witness\":";
  if (!v.witness) return out + "null}";
  const rfg::Witness& w = *v.witness;
  out += "{\"overlapping\":" + pairs_json(w.overlapping) + ",\"tangent\":" + pairs_json(w.tangent);
  out += ",\"jorgensen_value\":" + (w.jorgensen_value ? rfg::format_double(*w.jorgensen_value) : "null");
  out += ",\"gamma\":" + (w.gamma ? rfg::format_double(*w.gamma) : "null");
  out += std::string(",\"elementary\":") + (w.elementary ? "true" : "false") + "}}";
  return out;
}

} // namespace

extern "C" {

const char* rfg_version(void) { return "1.0.0"; }

const char* rfg_status_name(rfg_status status) {
  if (status == RFG_OK) return "Ok";
  if (status < RFG_NOT_IN_GROUP || status > RFG_INTERNAL) return "Unknown";
  static thread_local std::string name;
  name = rfg::error_code_name(static_cast<rfg::ErrorCode>(status));
  return name.c_str();
}

const char* rfg_last_error_message(void) { return last_error.c_str(); }

void rfg_string_free(char* s) { std::free(s); }

rfg_status rfg_mobius_build(rfg_complex a, rfg_complex c, rfg_mobius* out) {
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rfg::MobiusTransform::build(to_cpp(a), to_cpp(c)));
    return RFG_OK;
  });
}

rfg_status rfg_mobius_compose(const rfg_mobius* f, const rfg_mobius* g, rfg_mobius* out) {
  RFG_REQUIRE(f);
  RFG_REQUIRE(g);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rfg::compose(to_cpp(*f), to_cpp(*g)));
    return RFG_OK;
  });
}

rfg_status rfg_mobius_inverse(const rfg_mobius* f, rfg_mobius* out) {
  RFG_REQUIRE(f);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rfg::inverse(to_cpp(*f)));
    return RFG_OK;
  });
}

rfg_status rfg_mobius_apply(const rfg_mobius* f, rfg_complex z, rfg_complex* out) {
  RFG_REQUIRE(f);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rfg::apply(to_cpp(*f), to_cpp(z)));
    return RFG_OK;
  });
}

rfg_status rfg_mobius_classify(const rfg_mobius* f, rfg_kind* kind, double* beta, double* tau) {
  RFG_REQUIRE(f);
  return guarded([&] {
    const rfg::ClassificationResult r = rfg::classify(to_cpp(*f));
    if (kind) *kind = static_cast<rfg_kind>(r.kind);
    if (beta) *beta = r.beta;
    if (tau) *tau = r.tau;
    return RFG_OK;
  });
}

rfg_status rfg_mobius_gamma(const rfg_mobius* f, const rfg_mobius* g, double* out) {
  RFG_REQUIRE(f);
  RFG_REQUIRE(g);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = rfg::gamma(to_cpp(*f), to_cpp(*g));
    return RFG_OK;
  });
}

rfg_status rfg_mobius_fixed_points(const rfg_mobius* f, rfg_complex* plus, rfg_complex* minus) {
  RFG_REQUIRE(f);
  RFG_REQUIRE(plus);
  RFG_REQUIRE(minus);
  return guarded([&] {
    const rfg::FixedPoints fp = rfg::fixed_points(to_cpp(*f));
    *plus = to_c(fp.z_plus);
    *minus = to_c(fp.z_minus);
    if (fp.rotation_center) return fail(RFG_ROTATION_CENTER, "c = 0: fixed points are 0 and infinity");
    return RFG_OK;
  });
}

rfg_status rfg_mobius_isometric_arcs(const rfg_mobius* f, rfg_arc* plus, rfg_arc* minus) {
  RFG_REQUIRE(f);
  RFG_REQUIRE(plus);
  RFG_REQUIRE(minus);
  return guarded([&] {
    const rfg::IsometricArcs arcs = rfg::isometric_arcs(to_cpp(*f));
    *plus = to_c(arcs.plus_arc);
    *minus = to_c(arcs.minus_arc);
    return RFG_OK;
  });
}

rfg_status rfg_cross_ratio(rfg_complex z1, rfg_complex z2, rfg_complex z3, rfg_complex z4, rfg_complex* out) {
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rfg::cross_ratio(to_cpp(z1), to_cpp(z2), to_cpp(z3), to_cpp(z4)));
    return RFG_OK;
  });
}

rfg_status rfg_axes_complex_distance(const rfg_mobius* f, const rfg_mobius* g, double* delta, double* theta) {
  RFG_REQUIRE(f);
  RFG_REQUIRE(g);
  RFG_REQUIRE(delta);
  RFG_REQUIRE(theta);
  return guarded([&] {
    const rfg::ComplexDistance d = rfg::complex_distance(rfg::axis(to_cpp(*f)), rfg::axis(to_cpp(*g)));
    *delta = d.delta;
    *theta = d.theta;
    return RFG_OK;
  });
}

rfg_status rfg_arcs_to_mobius(double mid_arg_1, double mid_arg_2, double length, rfg_mobius* out) {
  RFG_REQUIRE(out);
  return guarded([&] {
    const rfg::ArcPair pair = rfg::ArcPair::make(std::polar(1.0, mid_arg_1), std::polar(1.0, mid_arg_2), length);
    *out = to_c(rfg::arcs_to_mobius(pair));
    return RFG_OK;
  });
}

rfg_status rfg_mobius_to_arcs(const rfg_mobius* f, rfg_arc* first, rfg_arc* second) {
  RFG_REQUIRE(f);
  RFG_REQUIRE(first);
  RFG_REQUIRE(second);
  return guarded([&] {
    const rfg::ArcPair pair = rfg::mobius_to_arcs(to_cpp(*f));
    *first = to_c(pair.first);
    *second = to_c(pair.second);
    return RFG_OK;
  });
}

rfg_status rfg_arcs_disjoint(rfg_arc x, rfg_arc y, int* out) {
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = rfg::arcs_disjoint(to_cpp(x), to_cpp(y)) ? 1 : 0;
    return RFG_OK;
  });
}

rfg_status rfg_stream_create(uint64_t seed, uint64_t index, rfg_stream** out) {
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = new rfg_stream{rfg::Stream(seed, index)};
    return RFG_OK;
  });
}

void rfg_stream_destroy(rfg_stream* stream) { delete stream; }

rfg_status rfg_stream_uniform(rfg_stream* stream, double* out) {
  RFG_REQUIRE(stream);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = stream->stream.uniform();
    return RFG_OK;
  });
}

rfg_status rfg_sample_mobius(rfg_stream* stream, rfg_mobius* out) {
  RFG_REQUIRE(stream);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rfg::sample_mobius(stream->stream));
    return RFG_OK;
  });
}

rfg_status rfg_sample_hyperbolic(rfg_stream* stream, rfg_mobius* out) {
  RFG_REQUIRE(stream);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rfg::sample_hyperbolic(stream->stream));
    return RFG_OK;
  });
}

rfg_status rfg_sample_parabolic(rfg_stream* stream, rfg_mobius* out) {
  RFG_REQUIRE(stream);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rfg::sample_parabolic(stream->stream));
    return RFG_OK;
  });
}

rfg_status rfg_sample_arc(rfg_stream* stream, int full_turn, rfg_arc* out) {
  RFG_REQUIRE(stream);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rfg::sample_arc(stream->stream, full_turn ? rfg::ArcSupport::FullTurn : rfg::ArcSupport::HalfTurn));
    return RFG_OK;
  });
}

rfg_status rfg_density_create(const char* name, rfg_density** out) {
  RFG_REQUIRE(name);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = new rfg_density{rfg::analytic::density(name)};
    return RFG_OK;
  });
}

void rfg_density_destroy(rfg_density* density) { delete density; }

rfg_status rfg_density_eval(const rfg_density* density, double x, double* out) {
  RFG_REQUIRE(density);
  RFG_REQUIRE(out);
  return guarded([&] {
    if (!density->fn.contains(x))
      return fail(RFG_DOMAIN_ERROR, density->fn.name + " is undefined at " + rfg::format_double(x));
    *out = density->fn(x);
    return RFG_OK;
  });
}

rfg_status rfg_density_domain(const rfg_density* density, double* lo, double* hi) {
  RFG_REQUIRE(density);
  RFG_REQUIRE(lo);
  RFG_REQUIRE(hi);
  *lo = density->fn.lo;
  *hi = density->fn.hi;
  return RFG_OK;
}

rfg_status rfg_density_names(char** out) {
  RFG_REQUIRE(out);
  return guarded([&] {
    std::string text;
    for (const std::string& name : rfg::analytic::density_names()) text += name + "\n";
    *out = duplicate(text);
    return RFG_OK;
  });
}

rfg_status rfg_dilog(double x, double* out) {
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = rfg::analytic::dilog(x);
    return RFG_OK;
  });
}

rfg_status rfg_prob_axis_meets_disk(double r, double* out) {
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = rfg::analytic::prob_axis_meets_disk(r);
    return RFG_OK;
  });
}

rfg_status rfg_prob_equal_arcs_disjoint(int n, double* exact, double* irwin_hall_route, double* prefactor_formula) {
  return guarded([&] {
    const rfg::analytic::EqualArcsProbability p = rfg::analytic::prob_equal_arcs_disjoint(n);
    if (exact) *exact = p.exact;
    if (irwin_hall_route) *irwin_hall_route = p.irwin_hall_route;
    if (prefactor_formula) *prefactor_formula = p.prefactor_formula;
    return RFG_OK;
  });
}

rfg_status rfg_axes_cross_quadrature(double* out) {
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = rfg::analytic::axes_cross_probability_quadrature();
    return RFG_OK;
  });
}

rfg_status rfg_experiment_list(char** json) {
  RFG_REQUIRE(json);
  return guarded([&] {
    std::string out = "[";
    bool first = true;
    for (const rfg::mc::ExperimentInfo& info : rfg::mc::registry()) {
      out += (first ? "" : ",") + std::string("{\"name\":") + rfg::json_string(info.name) +
             ",\"description\":" + rfg::json_string(info.description) +
             ",\"default_n\":" + std::to_string(info.default_n) + "}";
      first = false;
    }
    *json = duplicate(out + "]");
    return RFG_OK;
  });
}

rfg_status rfg_experiment_run(const char* name, uint64_t n, uint64_t seed, uint32_t streams, uint32_t workers,
                              rfg_report** out) {
  RFG_REQUIRE(name);
  RFG_REQUIRE(out);
  return guarded([&] {
    auto report = std::make_unique<rfg_report>();
    report->single = true;
    report->results.push_back(rfg::mc::run(name, {n, seed, streams, workers}));
    *out = report.release();
    return RFG_OK;
  });
}

rfg_status rfg_experiment_run_all(uint64_t n, uint64_t seed, uint32_t streams, uint32_t workers,
                                  rfg_report** out) {
  RFG_REQUIRE(out);
  return guarded([&] {
    auto report = std::make_unique<rfg_report>();
    report->results = rfg::mc::run_all({n, seed, streams, workers});
    *out = report.release();
    return RFG_OK;
  });
}

void rfg_report_destroy(rfg_report* report) { delete report; }

rfg_status rfg_report_json(const rfg_report* report, char** out) {
  RFG_REQUIRE(report);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = duplicate(report->single ? rfg::mc::to_json(report->results.front()) : rfg::mc::to_json(report->results));
    return RFG_OK;
  });
}

rfg_status rfg_report_summary(const rfg_report* report, char** out) {
  RFG_REQUIRE(report);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = duplicate(rfg::mc::summary(report->results));
    return RFG_OK;
  });
}

rfg_status rfg_report_passed(const rfg_report* report, int* passed) {
  RFG_REQUIRE(report);
  RFG_REQUIRE(passed);
  bool all = true;
  for (const auto& r : report->results) all = all && r.pass();
  *passed = all ? 1 : 0;
  return RFG_OK;
}

rfg_status rfg_report_histogram_csv(const rfg_report* report, char** out) {
  RFG_REQUIRE(report);
  RFG_REQUIRE(out);
  return guarded([&] {
    if (!report->single || !report->results.front().histogram)
      return fail(RFG_INVALID_ARGUMENT, "report has no histogram");
    *out = duplicate(rfg::mc::histogram_csv(*report->results.front().histogram));
    return RFG_OK;
  });
}

rfg_status rfg_verdict(const rfg_mobius* generators, size_t count, rfg_verdict_status* status, char** witness_json) {
  RFG_REQUIRE(status);
  if (count == 0) return fail(RFG_INVALID_ARGUMENT, "at least one generator is required");
  RFG_REQUIRE(generators);
  return guarded([&] {
    std::vector<rfg::MobiusTransform> gens;
    for (size_t i = 0; i < count; ++i) gens.push_back(to_cpp(generators[i]));
    const rfg::Verdict v = count == 2 ? rfg::combined_verdict(gens[0], gens[1]) : rfg::ping_pong(gens);
    std::string json = verdict_json(v);
    if (witness_json) *witness_json = duplicate(json);
    *status = static_cast<rfg_verdict_status>(v.status);
    return RFG_OK;
  });
}

const char* rfg_verdict_status_name(rfg_verdict_status status) {
  if (status < RFG_DISCRETE_FREE_BY_PING_PONG || status > RFG_INCONCLUSIVE) return "Unknown";
  return rfg::verdict_status_name(static_cast<rfg::VerdictStatus>(status)).data();
}

rfg_status rfg_verify(rfg_level level, int criterion, uint64_t seed, rfg_verify_callback callback, void* user,
                      int* all_passed) {
  if (criterion < 0 || criterion > rfg::acceptance::kCriterionCount)
    return fail(RFG_INVALID_ARGUMENT, "criterion out of range");
  return guarded([&] {
    const auto lvl = level == RFG_LEVEL_FULL ? rfg::acceptance::Level::Full : rfg::acceptance::Level::Quick;
    bool all = true;
    auto report = [&](const rfg::acceptance::CriterionResult& r) {
      all = all && r.pass();
      if (callback) callback(r.id, r.pass() ? 1 : 0, rfg::acceptance::format(r).c_str(), user);
    };
    if (criterion == 0)
      rfg::acceptance::run_all(lvl, report, seed);
    else
      report(rfg::acceptance::run_criterion(criterion, lvl, seed));
    if (all_passed) *all_passed = all ? 1 : 0;
    return RFG_OK;
  });
}

rfg_status rfg_mobius_to_json(const rfg_mobius* f, char** out) {
  RFG_REQUIRE(f);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = duplicate(rfg::mobius_to_json(to_cpp(*f)));
    return RFG_OK;
  });
}

rfg_status rfg_mobius_from_json(const char* line, rfg_mobius* out) {
  RFG_REQUIRE(line);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rfg::mobius_from_json(line));
    return RFG_OK;
  });
}

rfg_status rfg_arc_to_json(const rfg_arc* arc, char** out) {
  RFG_REQUIRE(arc);
  RFG_REQUIRE(out);
  return guarded([&] {
    *out = duplicate(rfg::arc_to_json(to_cpp(*arc)));
    return RFG_OK;
  });
}

} // extern "C"

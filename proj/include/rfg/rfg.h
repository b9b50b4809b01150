/* C interface to the random Fuchsian group library.
 *
 * Every function returns an rfg_status. On failure the outputs are left
 * untouched and rfg_last_error_message() describes the error for the calling
 * thread. Strings returned through char** outputs are owned by the caller and
 * released with rfg_string_free(). */
#ifndef RFG_RFG_H
#define RFG_RFG_H

#include <stddef.h>
#include <stdint.h>

#if defined(RFG_BUILDING_LIBRARY)
#define RFG_API __attribute__((visibility("default")))
#else
#define RFG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rfg_status {
  RFG_OK = 0,
  RFG_NOT_IN_GROUP = 1,
  RFG_POLE_AT_INPUT = 2,
  RFG_ROTATION_CENTER = 3, /* c = 0; outputs are still filled in */
  RFG_NO_ISOMETRIC_CIRCLE = 4,
  RFG_DEGENERATE_POINTS = 5,
  RFG_SHARED_ENDPOINT = 6,
  RFG_NOT_HYPERBOLIC = 7,
  RFG_DEGENERATE_LENGTH = 8,
  RFG_COINCIDENT_MIDPOINTS = 9,
  RFG_DOMAIN_ERROR = 10,
  RFG_NON_INTEGRABLE = 11,
  RFG_UNKNOWN_EXPERIMENT = 12,
  RFG_INVALID_ARGUMENT = 13,
  RFG_PARSE_ERROR = 14,
  RFG_INTERNAL = 15
} rfg_status;

typedef enum rfg_kind { RFG_IDENTITY = 0, RFG_ELLIPTIC = 1, RFG_PARABOLIC = 2, RFG_HYPERBOLIC = 3 } rfg_kind;

typedef enum rfg_verdict_status {
  RFG_DISCRETE_FREE_BY_PING_PONG = 0,
  RFG_DISCRETE_BY_PING_PONG_WITH_TANGENCY = 1,
  RFG_NOT_DISCRETE_BY_JORGENSEN = 2,
  RFG_ALMOST_SURELY_NOT_DISCRETE = 3,
  RFG_INCONCLUSIVE = 4
} rfg_verdict_status;

typedef enum rfg_level { RFG_LEVEL_QUICK = 0, RFG_LEVEL_FULL = 1 } rfg_level;

typedef struct rfg_complex {
  double re;
  double im;
} rfg_complex;

/* z -> (a z + c) / (conj(c) z + conj(a)) with |a|^2 - |c|^2 = 1. */
typedef struct rfg_mobius {
  rfg_complex a;
  rfg_complex c;
} rfg_mobius;

typedef struct rfg_arc {
  double mid_arg; /* argument of the midpoint */
  double length;  /* angular length */
} rfg_arc;

typedef struct rfg_stream rfg_stream;
typedef struct rfg_density rfg_density;
typedef struct rfg_report rfg_report;

RFG_API const char* rfg_version(void);
RFG_API const char* rfg_status_name(rfg_status status);
RFG_API const char* rfg_last_error_message(void);
RFG_API void rfg_string_free(char* s);

/* Transforms. Inputs are validated and normalized as by rfg_mobius_build. */
RFG_API rfg_status rfg_mobius_build(rfg_complex a, rfg_complex c, rfg_mobius* out);
RFG_API rfg_status rfg_mobius_compose(const rfg_mobius* f, const rfg_mobius* g, rfg_mobius* out);
RFG_API rfg_status rfg_mobius_inverse(const rfg_mobius* f, rfg_mobius* out);
RFG_API rfg_status rfg_mobius_apply(const rfg_mobius* f, rfg_complex z, rfg_complex* out);
RFG_API rfg_status rfg_mobius_classify(const rfg_mobius* f, rfg_kind* kind, double* beta, double* tau);
RFG_API rfg_status rfg_mobius_gamma(const rfg_mobius* f, const rfg_mobius* g, double* out);
/* For c = 0 returns RFG_ROTATION_CENTER with plus = 0 and minus = infinity. */
RFG_API rfg_status rfg_mobius_fixed_points(const rfg_mobius* f, rfg_complex* plus, rfg_complex* minus);
RFG_API rfg_status rfg_mobius_isometric_arcs(const rfg_mobius* f, rfg_arc* plus, rfg_arc* minus);
RFG_API rfg_status rfg_cross_ratio(rfg_complex z1, rfg_complex z2, rfg_complex z3, rfg_complex z4,
                                   rfg_complex* out);
/* Complex distance between the axes of two hyperbolic elements. */
RFG_API rfg_status rfg_axes_complex_distance(const rfg_mobius* f, const rfg_mobius* g, double* delta,
                                             double* theta);

/* Arc pairs. */
RFG_API rfg_status rfg_arcs_to_mobius(double mid_arg_1, double mid_arg_2, double length, rfg_mobius* out);
RFG_API rfg_status rfg_mobius_to_arcs(const rfg_mobius* f, rfg_arc* first, rfg_arc* second);
RFG_API rfg_status rfg_arcs_disjoint(rfg_arc x, rfg_arc y, int* out);

/* Random streams: stream `index` of the master `seed`. */
RFG_API rfg_status rfg_stream_create(uint64_t seed, uint64_t index, rfg_stream** out);
RFG_API void rfg_stream_destroy(rfg_stream* stream);
RFG_API rfg_status rfg_stream_uniform(rfg_stream* stream, double* out);
RFG_API rfg_status rfg_sample_mobius(rfg_stream* stream, rfg_mobius* out);
RFG_API rfg_status rfg_sample_hyperbolic(rfg_stream* stream, rfg_mobius* out);
RFG_API rfg_status rfg_sample_parabolic(rfg_stream* stream, rfg_mobius* out);
/* full_turn = 0: lengths uniform on [0, pi]; otherwise on [0, 2 pi]. */
RFG_API rfg_status rfg_sample_arc(rfg_stream* stream, int full_turn, rfg_arc* out);

/* Densities and analytic values. */
RFG_API rfg_status rfg_density_create(const char* name, rfg_density** out);
RFG_API void rfg_density_destroy(rfg_density* density);
/* RFG_DOMAIN_ERROR outside the domain and at singular points. */
RFG_API rfg_status rfg_density_eval(const rfg_density* density, double x, double* out);
RFG_API rfg_status rfg_density_domain(const rfg_density* density, double* lo, double* hi);
/* Newline-separated list of density names. */
RFG_API rfg_status rfg_density_names(char** out);
RFG_API rfg_status rfg_dilog(double x, double* out);
RFG_API rfg_status rfg_prob_axis_meets_disk(double r, double* out);
RFG_API rfg_status rfg_prob_equal_arcs_disjoint(int n, double* exact, double* irwin_hall_route,
                                                double* prefactor_formula);
RFG_API rfg_status rfg_axes_cross_quadrature(double* out);

/* Experiments. workers = 0 uses one thread per core; results never depend on it. */
RFG_API rfg_status rfg_experiment_list(char** json);
RFG_API rfg_status rfg_experiment_run(const char* name, uint64_t n, uint64_t seed, uint32_t streams,
                                      uint32_t workers, rfg_report** out);
RFG_API rfg_status rfg_experiment_run_all(uint64_t n, uint64_t seed, uint32_t streams, uint32_t workers,
                                          rfg_report** out);
RFG_API void rfg_report_destroy(rfg_report* report);
RFG_API rfg_status rfg_report_json(const rfg_report* report, char** out);
RFG_API rfg_status rfg_report_summary(const rfg_report* report, char** out);
RFG_API rfg_status rfg_report_passed(const rfg_report* report, int* passed);
/* RFG_INVALID_ARGUMENT when the report carries no histogram. */
RFG_API rfg_status rfg_report_histogram_csv(const rfg_report* report, char** out);

/* Discreteness verdict for the generators; witness_json may be NULL. Two
 * generators get the combined verdict, any other count the ping-pong test. */
RFG_API rfg_status rfg_verdict(const rfg_mobius* generators, size_t count, rfg_verdict_status* status,
                               char** witness_json);
RFG_API const char* rfg_verdict_status_name(rfg_verdict_status status);

/* Acceptance suite. criterion = 0 runs all of them; the callback receives the
 * formatted lines of each criterion as it finishes. */
typedef void (*rfg_verify_callback)(int criterion, int passed, const char* text, void* user);
RFG_API rfg_status rfg_verify(rfg_level level, int criterion, uint64_t seed, rfg_verify_callback callback,
                              void* user, int* all_passed);

/* JSON Lines records. */
RFG_API rfg_status rfg_mobius_to_json(const rfg_mobius* f, char** out);
RFG_API rfg_status rfg_mobius_from_json(const char* line, rfg_mobius* out);
RFG_API rfg_status rfg_arc_to_json(const rfg_arc* arc, char** out);

#ifdef __cplusplus
}
#endif

#endif

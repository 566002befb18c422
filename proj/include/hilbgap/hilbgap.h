#ifndef HILBGAP_H
#define HILBGAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(HILBGAP_BUILDING)
#define HM_API __attribute__((visibility("default")))
#else
#define HM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hm_monoid hm_monoid;

typedef enum {
  HM_OK = 0,
  HM_INVALID_INPUT,
  HM_NOT_POSITIVE,
  HM_NOT_HOMOGENEOUS,
  HM_DIMENSION_MISMATCH,
  HM_CAP_EXCEEDED,
  HM_OVERFLOW,
  HM_NOT_STABILIZED,
  HM_CERTIFICATE,
  HM_CHECK_FAILED,
  HM_INTERNAL
} hm_status;

typedef enum { HM_REPORT_HILB = 0, HM_REPORT_NORMALIZE, HM_REPORT_HOLES, HM_REPORT_COMPARE } hm_report_kind;

/* Negative values select the defaults. */
typedef struct {
  int64_t degree_bound;      /* fixed D; default grows D until the numerators stabilize */
  int64_t window;            /* trailing zero differences required; default max(4, dim) */
  int64_t margin;            /* hole families are inferred through D - margin; default dim */
  int64_t degree_limit;      /* ceiling for the adaptive D */
  int64_t certificate_bound; /* Hilbert basis regenerated through this degree; default dim + 1 */
  int64_t point_cap;
  int64_t cycle_cap;
  int text; /* nonzero: human-readable reports instead of JSON */
} hm_options;

HM_API void hm_options_init(hm_options* options);

/* Message of the last failure on the calling thread. */
HM_API const char* hm_last_error(void);
HM_API const char* hm_status_name(hm_status status);

HM_API hm_status hm_monoid_from_json(const char* json, hm_monoid** out);
HM_API hm_status hm_monoid_from_family(const char* name, int64_t param, hm_monoid** out);
/* Row-major rows x cols matrix of generators. */
HM_API hm_status hm_monoid_from_generators(const int64_t* data, size_t rows, size_t cols, hm_monoid** out);
HM_API hm_status hm_monoid_join(const hm_monoid* a, const hm_monoid* b, hm_monoid** out);
HM_API void hm_monoid_free(hm_monoid* q);

HM_API size_t hm_monoid_dim(const hm_monoid* q);
HM_API size_t hm_monoid_ambient_dim(const hm_monoid* q);
HM_API size_t hm_monoid_generator_count(const hm_monoid* q);
/* Minimal generators, row-major; capacity counts int64 slots. */
HM_API hm_status hm_monoid_generators(const hm_monoid* q, int64_t* out, size_t capacity);
HM_API hm_status hm_monoid_contains(const hm_monoid* q, const int64_t* v, size_t len, int* result);
HM_API hm_status hm_monoid_to_json(const hm_monoid* q, int text, char** out);

/* Strings returned through `out` are released with hm_string_free. When a
   cap stops the computation the status is HM_CAP_EXCEEDED and `out` still
   receives the partial report. */
HM_API hm_status hm_report(const hm_monoid* q, hm_report_kind kind, const hm_options* options, char** out);
HM_API hm_status hm_edge_ring_report(const char* graph_json, const hm_options* options, char** out);

typedef void (*hm_progress_fn)(int id, const char* name, int passed, const char* detail, double seconds,
                               void* user);
/* HM_CHECK_FAILED when any criterion fails. */
HM_API hm_status hm_paper_check(hm_progress_fn progress, void* user, int* failed);

HM_API void hm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif

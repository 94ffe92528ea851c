#ifndef SRGINT_H
#define SRGINT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a library call.
typedef enum SrgintStatus {
  SRGINT_STATUS_OK = 0,
  SRGINT_STATUS_NULL_POINTER = 1,
  SRGINT_STATUS_INVALID_UTF8 = 2,
  SRGINT_STATUS_PARSE = 3,
  SRGINT_STATUS_PRECONDITION = 4,
  SRGINT_STATUS_UNKNOWN_NAME = 5,
  SRGINT_STATUS_FAILED = 6,
  SRGINT_STATUS_PANIC = 7,
} SrgintStatus;

// Outcome of [`srgint_search`].
typedef enum SrgintOutcome {
  SRGINT_OUTCOME_FOUND = 0,
  SRGINT_OUTCOME_UNSAT = 1,
  SRGINT_OUTCOME_UNKNOWN = 2,
} SrgintOutcome;

// Opaque certificate handle.
typedef struct SrgintCertificate SrgintCertificate;

// Opaque graph handle.
typedef struct SrgintGraph SrgintGraph;

// `(v, k, lambda, mu)`.
typedef struct SrgintParams {
  size_t v;
  size_t k;
  size_t lambda;
  size_t mu;
} SrgintParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the
// next failing call on the same thread.
const char *srgint_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void srgint_string_free(char *s);

// Builds a graph from a registry name such as `"petersen"` or `"triangular:6"`.
//
// # Safety
// `name` must be a NUL-terminated string and `out` a valid pointer.
enum SrgintStatus srgint_graph_build(const char *name, struct SrgintGraph **out);

// Parses a graph from graph6 or JSON text.
//
// # Safety
// `source` must be a NUL-terminated string and `out` a valid pointer.
enum SrgintStatus srgint_graph_parse(const char *source, struct SrgintGraph **out);

// # Safety
// `g` must come from this library and not be freed twice. Null is ignored.
void srgint_graph_free(struct SrgintGraph *g);

// Number of vertices; 0 for null.
//
// # Safety
// `g` must be null or a live handle.
size_t srgint_graph_order(const struct SrgintGraph *g);

// graph6 encoding of `g`, or null on error.
//
// # Safety
// `g` must be null or a live handle.
char *srgint_graph_to_graph6(const struct SrgintGraph *g);

// Writes the parameters to `params` and sets `*is_srg`; when the graph is
// not strongly regular `params` is left untouched.
//
// # Safety
// All pointers must be valid.
enum SrgintStatus srgint_graph_srg_params(const struct SrgintGraph *g,
                                          bool *is_srg_out,
                                          struct SrgintParams *params);

// JSON strong-regularity report for `g`, or null on error.
//
// # Safety
// `g` must be null or a live handle.
char *srgint_graph_report_json(const struct SrgintGraph *g);

// Parses a certificate from its text form.
//
// # Safety
// `source` must be a NUL-terminated string and `out` a valid pointer.
enum SrgintStatus srgint_certificate_parse(const char *source, struct SrgintCertificate **out);

// # Safety
// `c` must come from this library and not be freed twice. Null is ignored.
void srgint_certificate_free(struct SrgintCertificate *c);

// Text form of `c`, or null on error.
//
// # Safety
// `c` must be null or a live handle.
char *srgint_certificate_to_text(const struct SrgintCertificate *c);

// Checks `N^T N = s(A + tI)`; `*accepted` receives the verdict.
//
// # Safety
// All pointers must be valid.
enum SrgintStatus srgint_certificate_verify(const struct SrgintGraph *g,
                                            const struct SrgintCertificate *c,
                                            bool *accepted);

// Searches for a certificate with the given scale and shift under a node
// budget. On `FOUND`, `*certificate` receives a new handle when non-null;
// otherwise it is set to null.
//
// # Safety
// `g` and `outcome` must be valid; `certificate` may be null.
enum SrgintStatus srgint_search(const struct SrgintGraph *g,
                                int64_t s,
                                int64_t t,
                                uint64_t budget,
                                enum SrgintOutcome *outcome,
                                struct SrgintCertificate **certificate);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SRGINT_H */

#ifndef ORDERLEX_ORDERLEX_H
#define ORDERLEX_ORDERLEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ORDERLEX_BUILDING_SHARED)
#    define OLX_API __declspec(dllexport)
#  else
#    define OLX_API __declspec(dllimport)
#  endif
#else
#  define OLX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the command-line exit codes. */
typedef enum olx_status {
  OLX_OK = 0,
  OLX_CHECK_FAILED = 1,        /* a verification ran and found a failure */
  OLX_PARSE_ERROR = 2,         /* malformed manifest, word, permutation or matrix */
  OLX_CERTIFICATION_ERROR = 3, /* monodromy, homomorphism or representation inconsistent */
  OLX_SELECTOR_ERROR = 4,      /* --hom / --rep did not resolve */
  OLX_INVALID_ARGUMENT = 5,
  OLX_INTERNAL_ERROR = 6
} olx_status;

typedef struct olx_manifest olx_manifest;

/* Run settings. Zero means "unset": depth falls back to the manifest, then 6;
 * trials to the manifest, then a per-check default; the seed to the
 * manifest, then 1. */
typedef struct olx_settings {
  int depth;
  uint64_t trials;
  int has_seed;
  uint64_t seed;
} olx_settings;

OLX_API const char* olx_version(void);
OLX_API const char* olx_status_name(olx_status status);

/* Message of the most recent failure on this thread ("" if none). For parse
 * errors, line and column are 1-based; otherwise both are 0. */
OLX_API const char* olx_last_error(void);
OLX_API size_t olx_last_error_line(void);
OLX_API size_t olx_last_error_column(void);

OLX_API void olx_settings_init(olx_settings* settings);

OLX_API olx_status olx_manifest_load_file(const char* path, olx_manifest** out);
OLX_API olx_status olx_manifest_load_string(const char* text, size_t length, olx_manifest** out);
OLX_API void olx_manifest_free(olx_manifest* manifest);

OLX_API const char* olx_manifest_label(const olx_manifest* manifest);
OLX_API int olx_manifest_rank(const olx_manifest* manifest);
OLX_API size_t olx_manifest_homomorphism_count(const olx_manifest* manifest);
OLX_API size_t olx_manifest_representation_count(const olx_manifest* manifest);

/* The functions below write a JSON document to *out_json, to be released
 * with olx_string_free. *out_json is set to NULL on any status other than
 * OLX_OK and OLX_CHECK_FAILED. */

/* Classical polynomial, invariant factors and verdict. */
OLX_API olx_status olx_alexander(const olx_manifest* manifest, char** out_json);

/* Twisted polynomial. Exactly one selector must be non-NULL: `hom` picks a
 * manifest homomorphism (by label or 0-based index) and uses its regular
 * representation; `rep` picks a manifest representation, or "trivial". */
OLX_API olx_status olx_twisted(const olx_manifest* manifest, const char* hom, const char* rep, int d_scale,
                               char** out_json);

/* Cover of the selected homomorphism: degree, index, basis, lifted monodromy
 * and the comparison with the twisted polynomial. */
OLX_API olx_status olx_cover(const olx_manifest* manifest, const char* hom, char** out_json);

/* which: "shapiro", "lemma4", "lemma5", "theorem2" or "order-lemmas". With a
 * NULL `hom`, shapiro and theorem2 use every manifest homomorphism, or all
 * homomorphisms to groups of order at most 6 when the manifest has none.
 * Returns OLX_CHECK_FAILED when a check fails. */
OLX_API olx_status olx_verify(const olx_manifest* manifest, const char* which, const char* hom,
                              const olx_settings* settings, char** out_json);

/* Everything above for the manifest in one document. */
OLX_API olx_status olx_report(const olx_manifest* manifest, const olx_settings* settings, char** out_json);

OLX_API void olx_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif

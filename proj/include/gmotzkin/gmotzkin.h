#ifndef GMOTZKIN_H
#define GMOTZKIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(GM_BUILDING_LIBRARY)
#define GM_API __attribute__((visibility("default")))
#else
#define GM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gm_status {
  GM_OK = 0,
  GM_ERR_ARGUMENT = 1,      /* null pointer, bad format or out-of-range size */
  GM_ERR_UNKNOWN_NAME = 2,  /* stat, identity, bijection or series name */
  GM_ERR_INVALID_PATH = 3,  /* token or height error in an encoded path */
  GM_ERR_DOMAIN = 4,        /* path outside a bijection's domain */
  GM_ERR_SERIES = 5,        /* fixed-point solve failed */
  GM_ERR_INTERNAL = 6,
} gm_status;

typedef enum gm_format { GM_FORMAT_TEXT = 0, GM_FORMAT_CSV = 1, GM_FORMAT_JSON = 2 } gm_format;

typedef enum gm_name_kind {
  GM_NAMES_TABLE = 0,
  GM_NAMES_IDENTITY = 1,
  GM_NAMES_BIJECTION = 2,
  GM_NAMES_SERIES = 3,
  GM_NAMES_CROSSCHECK = 4,
} gm_name_kind;

/* Message for the last failed call on this thread; empty after success. */
GM_API const char* gm_last_error(void);
GM_API const char* gm_version(void);

/* Owned UTF-8 text returned by the library. */
typedef struct gm_text gm_text;
GM_API const char* gm_text_str(const gm_text* t);
GM_API size_t gm_text_size(const gm_text* t);
GM_API void gm_text_free(gm_text* t);

/* Newline-separated list of accepted names. */
GM_API gm_status gm_list_names(gm_name_kind kind, gm_text** out);

/* Streams every path of length n in enumeration order. A nonzero return
   from the callback stops the walk early. */
typedef int (*gm_path_callback)(const char* path, void* user);
GM_API gm_status gm_enumerate(unsigned n, gm_path_callback cb, void* user);
GM_API gm_status gm_count_paths(unsigned n, unsigned threads, uint64_t* out);

/* Triangle rows 0..rows-1 as CSV or JSON. */
GM_API gm_status gm_table(const char* stat, unsigned rows, gm_format format, gm_text** out);

/* Series coefficients as JSON. y_order 0 means y_order = order. */
GM_API gm_status gm_series(const char* name, unsigned order, unsigned y_order, gm_text** out);

/* Verification reports: a list of pass/fail records. */
typedef struct gm_report gm_report;
GM_API size_t gm_report_count(const gm_report* r);
GM_API size_t gm_report_passed(const gm_report* r);
/* GM_FORMAT_TEXT or GM_FORMAT_JSON; timing adds elapsed milliseconds. */
GM_API gm_status gm_report_render(const gm_report* r, gm_format format, int timing, gm_text** out);
GM_API void gm_report_free(gm_report* r);

GM_API gm_status gm_bijection_apply(const char* name, const char* path, gm_text** out);
/* Exhaustive certification of one size. */
GM_API gm_status gm_bijection_check(const char* name, unsigned n, unsigned threads, gm_report** out);

typedef struct gm_verify_options {
  int has_max_n; /* nonzero: max_n overrides each identity's default bound */
  unsigned max_n;
  unsigned max_m;
  unsigned oracle_n;
  unsigned threads;
} gm_verify_options;

GM_API gm_verify_options gm_verify_defaults(void);
/* identity is a catalog key or "all". */
GM_API gm_status gm_verify(const char* identity, const gm_verify_options* opt, gm_report** out);
GM_API gm_status gm_crosscheck(const char* family, unsigned max_n, const gm_verify_options* opt, gm_report** out);

#ifdef __cplusplus
}
#endif

#endif

/* C interface of the genus-2 Prym pair Chow ring verifier. */

#ifndef PRYM2_H
#define PRYM2_H

/* Generated by cbindgen from crates/prym2-ffi; edit the Rust source instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes shared by all entry points.
 */
typedef enum Prym2Status {
  /*
   The call succeeded; for verification runs, everything passed.
   */
  PRYM2_STATUS_OK = 0,
  /*
   The call succeeded but at least one mathematical check failed.
   */
  PRYM2_STATUS_CHECK_FAILED = 1,
  /*
   A pointer was null or an identifier was not recognized.
   */
  PRYM2_STATUS_INVALID_ARGUMENT = 2,
  /*
   An unexpected internal failure.
   */
  PRYM2_STATUS_INTERNAL_ERROR = 3,
} Prym2Status;

/*
 Opaque verification report handle.
 */
typedef struct Prym2Report Prym2Report;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static string; do not free.
 */
const char *prym2_version(void);

/*
 Run the full verification (all checks plus the final theorem).

 On success `*out` owns the report; release it with
 [`prym2_report_free`].
 */
enum Prym2Status prym2_verify(struct Prym2Report **out);

/*
 Run one check by id (see [`prym2_check_ids`]).

 # Safety
 `id` must be a valid NUL-terminated string.
 */
enum Prym2Status prym2_check(const char *id, struct Prym2Report **out);

/*
 Newline-separated list of valid check ids. Free with
 [`prym2_string_free`].
 */
char *prym2_check_ids(void);

/*
 Whether every check in the report passed.

 # Safety
 `report` must be a live handle from [`prym2_verify`] or
 [`prym2_check`].
 */
bool prym2_report_passed(const struct Prym2Report *report);

/*
 Number of checks contained in the report.

 # Safety
 `report` must be a live handle.
 */
uintptr_t prym2_report_check_count(const struct Prym2Report *report);

/*
 The full report as pretty-printed JSON. Free with
 [`prym2_string_free`].

 # Safety
 `report` must be a live handle.
 */
char *prym2_report_json(const struct Prym2Report *report);

/*
 The presentation of the answer ring, when the report contains the
 theorem and it verified; null otherwise. Free with
 [`prym2_string_free`].

 # Safety
 `report` must be a live handle.
 */
char *prym2_report_presentation(const struct Prym2Report *report);

/*
 Release a report handle.

 # Safety
 `report` must be a handle from this library, not yet freed; null is a
 no-op.
 */
void prym2_report_free(struct Prym2Report *report);

/*
 Release a string allocated by this library.

 # Safety
 `s` must come from this library, not yet freed; null is a no-op.
 */
void prym2_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PRYM2_H */

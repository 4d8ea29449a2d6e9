#ifndef REALGW_H
#define REALGW_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RealgwFormat {
  REALGW_FORMAT_CSV = 0,
  REALGW_FORMAT_MARKDOWN = 1,
} RealgwFormat;

typedef enum RealgwStatus {
  REALGW_STATUS_OK = 0,
  REALGW_STATUS_NULL_POINTER = 1,
  REALGW_STATUS_INVALID_ARGUMENT = 2,
  REALGW_STATUS_UNSTABLE = 3,
  REALGW_STATUS_PARSE = 4,
  REALGW_STATUS_MISSING_ENTRY = 5,
  REALGW_STATUS_TABLE_MISMATCH = 6,
  REALGW_STATUS_NON_CONSTANT = 7,
  REALGW_STATUS_ARITHMETIC = 8,
  REALGW_STATUS_IO = 9,
  REALGW_STATUS_NOT_FOUND = 10,
  REALGW_STATUS_PANIC = 11,
} RealgwStatus;

// Holds the last error message. Not safe to share between threads.
typedef struct RealgwEngine RealgwEngine;

// One flavor/kind block of invariants.
typedef struct RealgwTable RealgwTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

struct RealgwEngine *realgw_engine_new(void);

// # Safety
// `engine` must come from [`realgw_engine_new`] and not be used afterwards.
void realgw_engine_free(struct RealgwEngine *engine);

// Empty after a successful call. Valid until the next call on the same engine.
//
// # Safety
// `engine` must be a live engine or null.
const char *realgw_engine_last_error(const struct RealgwEngine *engine);

// # Safety
// `s` must come from this library or be null.
void realgw_string_free(char *s);

// Real invariant as a reduced fraction string such as `-5/24`.
//
// # Safety
// `engine` must be live; `out` must be writable.
enum RealgwStatus realgw_gw_real(struct RealgwEngine *engine,
                                 uint32_t genus,
                                 uint32_t degree,
                                 char **out);

// Integral of psi and lambda classes over the moduli of genus `genus` curves
// with `n_psi` marked points.
//
// # Safety
// `psi` and `lambda` must point to `n_psi` and `n_lambda` values (or be null when the count is 0).
enum RealgwStatus realgw_hodge_integral(struct RealgwEngine *engine,
                                        uint32_t genus,
                                        const uint32_t *psi,
                                        uintptr_t n_psi,
                                        const uint32_t *lambda,
                                        uintptr_t n_lambda,
                                        char **out);

// First block of a CSV text.
//
// # Safety
// `text` must be a NUL-terminated string.
enum RealgwStatus realgw_table_parse(struct RealgwEngine *engine,
                                     const char *text,
                                     struct RealgwTable **out);

// Bundled table 1 (complex) or 2 (real); `enumerative` selects the E block.
//
// # Safety
// `out` must be writable.
enum RealgwStatus realgw_table_bundled(struct RealgwEngine *engine,
                                       uint32_t which,
                                       bool enumerative,
                                       struct RealgwTable **out);

// # Safety
// `table` must be live; `out` must be writable.
enum RealgwStatus realgw_table_emit(struct RealgwEngine *engine,
                                    const struct RealgwTable *table,
                                    enum RealgwFormat format,
                                    char **out);

// Entry at `(genus, degree)`; `NotFound` when absent.
//
// # Safety
// `table` must be live; `out` must be writable.
enum RealgwStatus realgw_table_get(struct RealgwEngine *engine,
                                   const struct RealgwTable *table,
                                   uint32_t genus,
                                   uint32_t degree,
                                   char **out);

// Enumerative counts from a GW table, or the reverse when `to_enumerative` is false.
//
// # Safety
// `table` must be live; `out` must be writable.
enum RealgwStatus realgw_table_convert(struct RealgwEngine *engine,
                                       const struct RealgwTable *table,
                                       bool to_enumerative,
                                       struct RealgwTable **out);

// # Safety
// `table` must come from this library and not be used afterwards.
void realgw_table_free(struct RealgwTable *table);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* REALGW_H */

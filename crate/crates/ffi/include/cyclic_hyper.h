#ifndef CYCLIC_HYPER_H
#define CYCLIC_HYPER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum ChdStatus {
  CHD_STATUS_OK = 0,
  /**
   * The sequence is not a cyclic hyper degree, or a witness failed verification.
   */
  CHD_STATUS_REJECTED = 1,
  CHD_STATUS_INVALID = 2,
  CHD_STATUS_CAPACITY = 3,
  CHD_STATUS_NULL_POINTER = 4,
  CHD_STATUS_INCONSISTENT = 5,
  CHD_STATUS_PANIC = 6,
} ChdStatus;

/**
 * A parsed degree sequence.
 */
typedef struct ChdDegrees ChdDegrees;

/**
 * A certificate together with the sequence it realizes.
 */
typedef struct ChdWitness ChdWitness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. Valid until the next
 * call into this library on the same thread; never null.
 */
const char *chd_last_error(void);

/**
 * Parses comma-separated decimal degrees such as `"4,1,1,1"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum ChdStatus chd_degrees_parse(const char *text, struct ChdDegrees **out);

/**
 * Number of entries, or 0 for a null handle.
 *
 * # Safety
 * `degrees` must be null or a live handle from [`chd_degrees_parse`].
 */
uint32_t chd_degrees_order(const struct ChdDegrees *degrees);

/**
 * # Safety
 * `degrees` must be null or a handle from [`chd_degrees_parse`] not yet freed.
 */
void chd_degrees_free(struct ChdDegrees *degrees);

/**
 * Decides the sequence. Returns `OK` and a witness in `out`, or `REJECTED`
 * with `out` set to null.
 *
 * # Safety
 * `degrees` must be a live handle and `out` a writable pointer.
 */
enum ChdStatus chd_recognize(const struct ChdDegrees *degrees, struct ChdWitness **out);

/**
 * # Safety
 * `witness` must be null or a handle from [`chd_recognize`] not yet freed.
 */
void chd_witness_free(struct ChdWitness *witness);

/**
 * Window length `N` as a decimal string.
 *
 * # Safety
 * `witness` must be a live handle and `out` a writable pointer.
 */
enum ChdStatus chd_witness_window(const struct ChdWitness *witness, char **out);

/**
 * Writes the 1-based vertex carried by each column into `buf[0..n]`.
 *
 * # Safety
 * `witness` must be a live handle and `buf` must hold `len` elements.
 */
enum ChdStatus chd_witness_permutation(const struct ChdWitness *witness,
                                       uintptr_t *buf,
                                       uintptr_t len);

/**
 * Start offset of 1-based column `index` as a decimal string.
 *
 * # Safety
 * `witness` must be a live handle and `out` a writable pointer.
 */
enum ChdStatus chd_witness_start(const struct ChdWitness *witness, uint32_t index, char **out);

/**
 * The decision document used by `chd witness --json`, without edges.
 *
 * # Safety
 * `witness` must be a live handle and `out` a writable pointer.
 */
enum ChdStatus chd_witness_to_json(const struct ChdWitness *witness, char **out);

/**
 * Checks `witness` against `degrees`: `OK` if it realizes them, else `REJECTED`.
 *
 * # Safety
 * Both handles must be live.
 */
enum ChdStatus chd_witness_verify(const struct ChdDegrees *degrees,
                                  const struct ChdWitness *witness);

/**
 * Range `[lo, hi]` of window sums of column `index` for window length
 * `window` (decimal) at `order`.
 *
 * # Safety
 * `window` must be a NUL-terminated string; `lo` and `hi` writable pointers.
 */
enum ChdStatus chd_range(uint32_t order, uint32_t index, const char *window, char **lo, char **hi);

/**
 * `2^((n-1)(n-2)/2)` as a decimal string.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum ChdStatus chd_lower_bound(uint32_t order, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void chd_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLIC_HYPER_H */

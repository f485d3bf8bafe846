#ifndef PRACTICUM_H
#define PRACTICUM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PracticumStatus {
  PRACTICUM_STATUS_OK = 0,
  PRACTICUM_STATUS_NULL_POINTER = 1,
  PRACTICUM_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A work or memory budget was exceeded.
   */
  PRACTICUM_STATUS_BUDGET = 3,
  /**
   * A result contradicted a proven statement.
   */
  PRACTICUM_STATUS_FALSIFICATION = 4,
  PRACTICUM_STATUS_IO = 5,
  /**
   * A panic was caught at the boundary.
   */
  PRACTICUM_STATUS_INTERNAL = 6,
} PracticumStatus;

/**
 * A practical-number bitmap.
 */
typedef struct PracticumSieve PracticumSieve;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The last error message on this thread, or null. The pointer stays valid
 * until the next failing call on the same thread.
 */
const char *practicum_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void practicum_string_free(char *s);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum PracticumStatus practicum_is_practical(uint64_t n, bool *out);

/**
 * σ(n); fails with `INVALID_ARGUMENT` if it does not fit in 64 bits.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum PracticumStatus practicum_sigma(uint64_t n, uint64_t *out);

/**
 * Subset-sum decision, refusing n above `bound`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum PracticumStatus practicum_oracle(uint64_t n, uint64_t bound, bool *out);

/**
 * Stewart verdict for a decimal integer of any size, as JSON.
 *
 * # Safety
 * `n` must be a nul-terminated string; `out` valid for writes.
 */
enum PracticumStatus practicum_verdict_json(const char *n, char **out);

/**
 * Classification of a·n + b as JSON.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum PracticumStatus practicum_classify_ap_json(uint64_t a, uint64_t b, char **out);

/**
 * m_q(p) for q = a·n² + b·n + c as JSON.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum PracticumStatus practicum_mq_json(int64_t a, int64_t b, int64_t c, uint64_t p, char **out);

/**
 * Practical-values classification of a·n² + b·n + c as JSON.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum PracticumStatus practicum_classify_quadratic_json(int64_t a, int64_t b, int64_t c, char **out);

/**
 * n = x² + P with P practical, for n ≡ 1 (mod 8), n > 1.
 *
 * # Safety
 * `x` and `practical_part` must be valid for writes.
 */
enum PracticumStatus practicum_decompose(uint64_t n, uint64_t *x, uint64_t *practical_part);

/**
 * Smallest practical p1 ≤ p2 with p1 + p2 = n. `sieve` may be null.
 *
 * # Safety
 * `sieve` must be null or a live handle; `p1`, `p2` valid for writes.
 */
enum PracticumStatus practicum_goldbach(uint64_t n,
                                        const struct PracticumSieve *sieve,
                                        uint64_t *p1,
                                        uint64_t *p2);

/**
 * Sieves practical numbers up to `limit`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum PracticumStatus practicum_sieve_new(uint64_t limit, struct PracticumSieve **out);

/**
 * Loads a bitmap written by [`practicum_sieve_save`] or the CLI.
 *
 * # Safety
 * `path` must be a nul-terminated string; `out` valid for writes.
 */
enum PracticumStatus practicum_sieve_load(const char *path, struct PracticumSieve **out);

/**
 * # Safety
 * `sieve` must be a live handle; `path` a nul-terminated string.
 */
enum PracticumStatus practicum_sieve_save(const struct PracticumSieve *sieve, const char *path);

/**
 * The limit the sieve was built for.
 *
 * # Safety
 * `sieve` must be a live handle; `out` valid for writes.
 */
enum PracticumStatus practicum_sieve_limit(const struct PracticumSieve *sieve, uint64_t *out);

/**
 * Membership of n; fails for n outside [1, limit].
 *
 * # Safety
 * `sieve` must be a live handle; `out` valid for writes.
 */
enum PracticumStatus practicum_sieve_contains(const struct PracticumSieve *sieve,
                                              uint64_t n,
                                              bool *out);

/**
 * P(x) for x up to the sieve limit.
 *
 * # Safety
 * `sieve` must be a live handle; `out` valid for writes.
 */
enum PracticumStatus practicum_sieve_count(const struct PracticumSieve *sieve,
                                           uint64_t x,
                                           uint64_t *out);

/**
 * Releases a sieve handle. Null is ignored.
 *
 * # Safety
 * `sieve` must come from this library and not have been freed already.
 */
void practicum_sieve_free(struct PracticumSieve *sieve);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PRACTICUM_H */

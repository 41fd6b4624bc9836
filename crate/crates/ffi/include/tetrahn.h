#ifndef TETRAHN_H
#define TETRAHN_H

#include <stdint.h>
#include <stddef.h>

// Result code of every fallible call.
typedef enum TetrahnStatus {
  TETRAHN_STATUS_OK = 0,
  TETRAHN_STATUS_NULL_POINTER = 1,
  TETRAHN_STATUS_INVALID_ARGUMENT = 2,
  TETRAHN_STATUS_MISMATCHED_SCROLL = 3,
  TETRAHN_STATUS_WRONG_CODIMENSION = 4,
  TETRAHN_STATUS_OVERFLOW = 5,
  TETRAHN_STATUS_PANIC = 6,
} TetrahnStatus;

// Outcome of a filtration verdict.
typedef enum TetrahnVerdictStatus {
  TETRAHN_VERDICT_STATUS_PASS = 0,
  TETRAHN_VERDICT_STATUS_CONDITIONAL = 1,
  TETRAHN_VERDICT_STATUS_FAIL = 2,
} TetrahnVerdictStatus;

// Opaque Chow class in normal form.
typedef struct TetrahnClass TetrahnClass;

// Opaque scroll `P(O(a_1) ⊕ … ⊕ O(a_r))`.
typedef struct TetrahnScroll TetrahnScroll;

// Opaque filtration verdict.
typedef struct TetrahnVerdict TetrahnVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL.
const char *tetrahn_last_error(void);

// Releases a string returned by this library. NULL is ignored.
void tetrahn_string_free(char *s);

// Creates a scroll from `len` twists (any order, `len >= 2`).
enum TetrahnStatus tetrahn_scroll_new(const int64_t *twists,
                                      uintptr_t len,
                                      struct TetrahnScroll **out);

void tetrahn_scroll_free(struct TetrahnScroll *s);

// Rank (dimension) and first Chern class of the scroll.
enum TetrahnStatus tetrahn_scroll_info(const struct TetrahnScroll *s, uintptr_t *rank, int64_t *c1);

// `coeff · H^h_pow R^r_pow` on `s`, reduced to normal form.
enum TetrahnStatus tetrahn_class_monomial(const struct TetrahnScroll *s,
                                          uint32_t h_pow,
                                          uint32_t r_pow,
                                          int64_t coeff,
                                          struct TetrahnClass **out);

void tetrahn_class_free(struct TetrahnClass *c);

enum TetrahnStatus tetrahn_class_add(const struct TetrahnClass *a,
                                     const struct TetrahnClass *b,
                                     struct TetrahnClass **out);

enum TetrahnStatus tetrahn_class_mul(const struct TetrahnClass *a,
                                     const struct TetrahnClass *b,
                                     struct TetrahnClass **out);

enum TetrahnStatus tetrahn_class_scale(const struct TetrahnClass *a,
                                       int64_t k,
                                       struct TetrahnClass **out);

// The class on the scroll with every twist shifted by `m`.
enum TetrahnStatus tetrahn_class_retwist(const struct TetrahnClass *a,
                                         int64_t m,
                                         struct TetrahnClass **out);

enum TetrahnStatus tetrahn_class_coeff(const struct TetrahnClass *a,
                                       uintptr_t h_pow,
                                       uintptr_t r_pow,
                                       int64_t *out);

enum TetrahnStatus tetrahn_class_degree(const struct TetrahnClass *a, int64_t *out);

// JSON form `{"scroll": {"twists": [...]}, "coeffs": {...}}`.
enum TetrahnStatus tetrahn_class_to_json(const struct TetrahnClass *a, char **out);

enum TetrahnStatus tetrahn_intersect_number(const struct TetrahnClass *curve,
                                            const struct TetrahnClass *divisor,
                                            int64_t *out);

// `[C]` of the general tetragonal curve of genus `g` on its scroll.
enum TetrahnStatus tetrahn_curve_class(int64_t g, struct TetrahnClass **out);

// `degree / rank` in lowest terms.
enum TetrahnStatus tetrahn_slope(uint64_t rank, int64_t degree, int64_t *num, int64_t *den);

// The subbundle bound `2g + 2 + 4/(g-2)` assembled from the degeneration.
enum TetrahnStatus tetrahn_combined_bound(int64_t g, int64_t *num, int64_t *den);

// Verdict for the general tetragonal curve of genus `g`.
enum TetrahnStatus tetrahn_verify_theorem(int64_t g, struct TetrahnVerdict **out);

void tetrahn_verdict_free(struct TetrahnVerdict *v);

enum TetrahnStatus tetrahn_verdict_status(const struct TetrahnVerdict *v,
                                          enum TetrahnVerdictStatus *out);

enum TetrahnStatus tetrahn_verdict_to_json(const struct TetrahnVerdict *v, char **out);

// Verdicts for every genus in `lo..=hi` as a JSON report document. The number
// of failed genera is written to `failed`.
enum TetrahnStatus tetrahn_sweep_json(int64_t lo, int64_t hi, char **out, uint64_t *failed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TETRAHN_H */

#ifndef AFFINE_DEMAZURE_H
#define AFFINE_DEMAZURE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AdStatus {
  AD_STATUS_OK = 0,
  AD_STATUS_NULL_POINTER = 1,
  AD_STATUS_INVALID_UTF8 = 2,
  AD_STATUS_INVALID_ARGUMENT = 3,
  AD_STATUS_PARSE = 4,
  AD_STATUS_OUTSIDE_TITS_CONE = 5,
  AD_STATUS_VIOLATION = 6,
  AD_STATUS_BUFFER_TOO_SMALL = 7,
  AD_STATUS_PANIC = 8,
} AdStatus;

typedef enum AdLpKind {
  AD_LP_KIND_FINITE = 0,
  // The identity and every element whose reduced word starts with `s0`.
  AD_LP_KIND_LEFT = 1,
  // The identity and every element whose reduced word starts with `s1`.
  AD_LP_KIND_RIGHT = 2,
  AD_LP_KIND_ALL = 3,
} AdLpKind;

// Opaque handle to an element `w * eps^mu` of the semigroup.
typedef struct AdElement AdElement;

// `v0 * tau^t` with `v0 = 0` for the identity and `v0 = 1` for `s1`.
typedef struct AdWeyl {
  int32_t v0;
  int64_t t;
} AdWeyl;

// `k*av + m*d + l*L`.
typedef struct AdCoweight {
  int64_t k;
  int64_t m;
  int64_t l;
} AdCoweight;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call into this library.
const char *ad_last_error_message(void);

// Parse `<word> e[<coweight>]`, e.g. `"s0 s1 e[-1a+0d+1L]"`.
//
// # Safety
// `text` is a NUL-terminated string; `out` is valid for one write.
enum AdStatus ad_element_parse(const char *text, struct AdElement **out);

// # Safety
// `out` is valid for one write.
enum AdStatus ad_element_new(struct AdWeyl w, struct AdCoweight mu, struct AdElement **out);

// Release a handle. Null is ignored.
//
// # Safety
// `x` is null or a handle from this library that has not been freed.
void ad_element_free(struct AdElement *x);

// # Safety
// `x` is a live handle; `w` and `mu` are valid for one write each.
enum AdStatus ad_element_components(const struct AdElement *x,
                                    struct AdWeyl *w,
                                    struct AdCoweight *mu);

// # Safety
// `x` is a live handle; `out` is valid for one write.
enum AdStatus ad_element_length(const struct AdElement *x, int64_t *out);

// Canonical text form; release it with [`ad_string_free`].
//
// # Safety
// `x` is a live handle; `out` is valid for one write.
enum AdStatus ad_element_to_string(const struct AdElement *x, char **out);

// # Safety
// `s` is null or a string from [`ad_element_to_string`] not yet freed.
void ad_string_free(char *s);

// Semigroup product `xy`.
//
// # Safety
// `x`, `y` are live handles; `out` is valid for one write.
enum AdStatus ad_wt_mul(const struct AdElement *x,
                        const struct AdElement *y,
                        struct AdElement **out);

// Demazure product `x * y` and its length defect. `dist` may be null.
//
// # Safety
// `x`, `y` are live handles; `out` is valid for one write; `dist` is null
// or valid for one write.
enum AdStatus ad_dem_product(const struct AdElement *x,
                             const struct AdElement *y,
                             struct AdElement **out,
                             uint64_t *dist);

// Length positive set. For a finite set, up to `cap` elements are written to
// `buf` and `len` receives the size; if `cap` is too small the call returns
// `BufferTooSmall` with `len` set. Finite sets have at most three elements.
//
// # Safety
// `x` is a live handle; `kind` and `len` are valid for one write; `buf` is
// valid for `cap` writes (or null when `cap` is 0).
enum AdStatus ad_lp_set(const struct AdElement *x,
                        enum AdLpKind *kind,
                        struct AdWeyl *buf,
                        size_t cap,
                        size_t *len);

// Distance `u => v` in the quantum Bruhat graph.
//
// # Safety
// `out` is valid for one write.
enum AdStatus ad_qbg_distance(struct AdWeyl u, struct AdWeyl v, uint64_t *out);

// Weight of any shortest path `u => v`.
//
// # Safety
// `out` is valid for one write.
enum AdStatus ad_qbg_weight(struct AdWeyl u, struct AdWeyl v, struct AdCoweight *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AFFINE_DEMAZURE_H */

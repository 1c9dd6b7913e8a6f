/*
 * rtri — rainbow unit equilateral triangles over F_q^2.
 *
 * C API of the shared library. All objects are opaque handles created and
 * destroyed through these functions; every fallible call returns an RTRI_E_*
 * status (RTRI_OK on success) and leaves a human-readable detail string in
 * rtri_last_error() (thread-local).
 *
 * Conventions:
 *   - field elements travel as canonical encodings: e = sum coeffs[i] * p^i,
 *     an integer in [0, q)
 *   - points of F_q^2 travel as canonical indices: enc(x1) * q + enc(x2),
 *     an integer in [0, q^2)
 *   - strings returned through char** are heap-allocated; release them with
 *     rtri_string_free
 */

#ifndef RTRI_H
#define RTRI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rtri_field rtri_field;
typedef struct rtri_coloring rtri_coloring;
typedef struct rtri_report rtri_report;

enum {
    RTRI_OK = 0,
    RTRI_E_NOT_PRIME = 1,
    RTRI_E_CHAR_TOO_SMALL = 2,
    RTRI_E_REDUCIBLE_MODULUS = 3,
    RTRI_E_DIVISION_BY_ZERO = 4,
    RTRI_E_MIXED_FIELDS = 5,
    RTRI_E_BAD_ARGUMENT = 6,
    RTRI_E_PARSE = 7,
    RTRI_E_COVERAGE = 8,
    RTRI_E_FIELD_MISMATCH = 9,
    RTRI_E_GROUND_SET_MISMATCH = 10,
    RTRI_E_EMPTY_COLORING = 11,
    RTRI_E_NONPOSITIVE_U = 12,
    RTRI_E_INCOMPLETE_COLORING = 13,
    RTRI_E_NO_TRIANGLES = 14,
    RTRI_E_CLASS_TOO_LARGE = 15,
    RTRI_E_NOT_UNIT_PAIR = 16,
    RTRI_E_INVALID_S = 17,
    RTRI_E_BAD_COLOR_COUNT = 18,
    RTRI_E_FIELD_TOO_SMALL = 19,
    RTRI_E_SUBSET_TOO_LARGE = 20,
    RTRI_E_IO = 21,
    RTRI_E_INTERNAL = 22
};

const char* rtri_version(void);
const char* rtri_status_name(int status);
/* detail of the last failure on this thread; empty string when none */
const char* rtri_last_error(void);
void rtri_string_free(char* s);

/* ---- field ------------------------------------------------------------ */

/* modulus: NULL to auto-search (seeded) when k > 1, else monic degree-k
 * coefficient list c0..ck (length k + 1) */
int rtri_field_create(uint64_t p, uint32_t k, const uint64_t* modulus,
                      size_t modulus_len, uint64_t seed, rtri_field** out);
void rtri_field_destroy(rtri_field* f);

uint64_t rtri_field_p(const rtri_field* f);
uint32_t rtri_field_k(const rtri_field* f);
uint64_t rtri_field_q(const rtri_field* f);
/* writes k+1 coefficients; buf_len must be >= k+1 */
int rtri_field_modulus(const rtri_field* f, uint64_t* buf, size_t buf_len);
/* the serialization header line, e.g. "field p=13 k=1" */
int rtri_field_header(const rtri_field* f, char** out);

int rtri_field_add(const rtri_field* f, uint64_t a, uint64_t b, uint64_t* out);
int rtri_field_sub(const rtri_field* f, uint64_t a, uint64_t b, uint64_t* out);
int rtri_field_mul(const rtri_field* f, uint64_t a, uint64_t b, uint64_t* out);
int rtri_field_neg(const rtri_field* f, uint64_t a, uint64_t* out);
int rtri_field_inv(const rtri_field* f, uint64_t a, uint64_t* out);
int rtri_field_pow(const rtri_field* f, uint64_t a, uint64_t n, uint64_t* out);
/* quadratic character: -1, 0 or +1 */
int rtri_field_chi(const rtri_field* f, uint64_t e, int* out);
/* *exists = 1 and roots in *r0 <= *r1 when e is a square (r0 = r1 = 0 for
 * e = 0), else *exists = 0 */
int rtri_field_sqrt(const rtri_field* f, uint64_t e, int* exists, uint64_t* r0,
                    uint64_t* r1);

/* ---- plane geometry ---------------------------------------------------- */

int rtri_circle_size(const rtri_field* f, uint64_t* out);
/* canonical point indices of the circle vectors, ascending; buf_len must be
 * >= the circle size */
int rtri_circle_points(const rtri_field* f, uint64_t* buf, size_t buf_len,
                       size_t* written);
int rtri_distance(const rtri_field* f, uint64_t x_idx, uint64_t y_idx, uint64_t* out);
int rtri_ordered_unit_pairs(const rtri_field* f, uint64_t* out);
/* *exists = 1 and *root = smaller root of s^2 = 3 when present */
int rtri_sqrt3(const rtri_field* f, int* exists, uint64_t* root);
int rtri_triangles_exist(const rtri_field* f, int* exists);
/* exact count via the pair identity */
int rtri_triangle_count(const rtri_field* f, uint64_t* out);
/* count by streaming enumeration (parallel when threads != 1; 0 = auto) */
int rtri_triangle_count_enumerated(const rtri_field* f, int threads, uint64_t* out);
/* apex pair of a unit pair, as point indices, in formula order */
int rtri_apexes(const rtri_field* f, uint64_t x_idx, uint64_t y_idx,
                uint64_t* apex0, uint64_t* apex1);

/* ---- colorings --------------------------------------------------------- */

/* ground set [0, len); every id must be < color_bound */
int rtri_coloring_create(uint64_t len, const uint32_t* assignment,
                         uint32_t color_bound, rtri_coloring** out);
/* kind: uniform-random | fair-random | max2 | degenerate-example |
 * monochrome | all-distinct */
int rtri_coloring_generate(const rtri_field* f, const char* kind,
                           uint64_t color_count, uint64_t seed, rtri_coloring** out);
int rtri_coloring_load(const char* path, rtri_field** field_out, rtri_coloring** out);
int rtri_coloring_save(const rtri_field* f, const rtri_coloring* c, const char* path);
void rtri_coloring_destroy(rtri_coloring* c);

uint64_t rtri_coloring_ground_size(const rtri_coloring* c);
uint32_t rtri_coloring_color_bound(const rtri_coloring* c);
uint64_t rtri_coloring_class_count(const rtri_coloring* c);
int rtri_coloring_color_of(const rtri_coloring* c, uint64_t elem, uint32_t* out);
/* sizes in non-increasing order; buf_len >= class count */
int rtri_coloring_profile(const rtri_coloring* c, uint64_t* buf, size_t buf_len,
                          size_t* written);
/* fairness with bounds [lower, upper] * n; pass n_num = 0 for the default
 * n = ground / classes. *fair = 1/0; on unfair, a smallest violating class. */
int rtri_coloring_is_fair(const rtri_coloring* c, int64_t lower_num, int64_t lower_den,
                          int64_t upper_num, int64_t upper_den, int64_t n_num,
                          int64_t n_den, int* fair, uint32_t* violating_class,
                          uint64_t* violating_size);
int rtri_refines(const rtri_coloring* fine, const rtri_coloring* coarse, int* out);

/* trace_out (optional): rendered trace, format 0 = text, 1 = json */
int rtri_fairify(const rtri_coloring* c, int format, rtri_coloring** out,
                 char** trace_out);
int rtri_coarsen(const rtri_coloring* c, int64_t u_num, int64_t u_den, int format,
                 rtri_coloring** out, char** trace_out);

/* ---- rainbow search ---------------------------------------------------- */

/* mode 0 = count-all, 1 = first-witness */
int rtri_find_rainbow(const rtri_field* f, const rtri_coloring* c, int mode,
                      int threads, rtri_report** out);
int rtri_find_rainbow_size2(const rtri_field* f, const rtri_coloring* c,
                            rtri_report** out);
int rtri_bound_check(const rtri_field* f, const rtri_coloring* c, int threads,
                     rtri_report** out);
/* u_num = 0 selects the default u = ceil(sqrt(q)) */
int rtri_pipeline(const rtri_field* f, const rtri_coloring* c, int64_t u_num,
                  int64_t u_den, int threads, rtri_report** out);
int rtri_mono_unit_pairs(const rtri_field* f, const rtri_coloring* c, int threads,
                         uint64_t* out);
/* ordered unit-pair count inside an explicit set of point indices */
int rtri_subset_unit_pairs(const rtri_field* f, const uint64_t* points, size_t n,
                           uint64_t* count);

void rtri_report_destroy(rtri_report* r);
uint64_t rtri_report_total_triangles(const rtri_report* r);
uint64_t rtri_report_rainbow_count(const rtri_report* r);
uint64_t rtri_report_mono_pairs(const rtri_report* r);
/* pipeline reports only; 0 otherwise */
uint64_t rtri_report_t(const rtri_report* r);
uint64_t rtri_report_k(const rtri_report* r);
int rtri_report_bound_holds(const rtri_report* r);
/* *found = 1 and vertices/colors filled (arrays of 3) when a witness exists */
int rtri_report_witness(const rtri_report* r, int* found, uint64_t* vertices,
                        uint32_t* colors);
/* pipeline stage colorings: stage 1 = fairified, 2 = coarsened */
int rtri_report_stage_coloring(const rtri_report* r, int stage, rtri_coloring** out);
/* rendered report, format 0 = text, 1 = json */
int rtri_report_render(const rtri_report* r, int format, char** out);

/* ---- experiments ------------------------------------------------------- */

/* CSV with columns q,p,k_field,circle_size,ordered_pairs,triangles,
 * coloring_seed,color_count,pipeline_t,pipeline_k,rainbow_found,
 * elapsed_millis; tasks = comma list of counts,pipeline,vinh */
int rtri_sweep_csv(const uint64_t* q_list, size_t q_count, const char* tasks,
                   uint64_t seed, uint64_t color_count, int threads, char** out);
/* CSV with columns trial,n,unit_pairs,ratio_num,ratio_den */
int rtri_vinh_csv(const rtri_field* f, uint64_t subset_size, uint32_t trials,
                  uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* RTRI_H */

/*
 * amenlab: Følner sets, Reiter functions, harem matchings and paradoxical
 * decompositions over numbered groups.
 *
 * Conventions
 *   - Group elements are uint64_t codes; code 0 is the identity.
 *   - Code lists passed in need not be sorted or unique. Lists returned are
 *     sorted and unique and must be released with amenlab_codes_free.
 *   - Strings returned through char** are NUL-terminated JSON or text and
 *     must be released with amenlab_string_free.
 *   - Every call returns an amenlab_status. AMENLAB_UNKNOWN means a budget ran
 *     out before a definite answer; outputs are then left untouched unless
 *     documented otherwise. On an error status amenlab_last_error() describes
 *     the failure (per thread).
 *   - A budget of 0 selects the default of 1000000 elementary oracle calls.
 */
#ifndef AMENLAB_AMENLAB_H_
#define AMENLAB_AMENLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AMENLAB_API __declspec(dllexport)
#else
#define AMENLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum amenlab_status {
  AMENLAB_OK = 0,
  AMENLAB_UNKNOWN = 1,
  AMENLAB_ERR_MALFORMED_SPEC = 10,
  AMENLAB_ERR_MALFORMED_INPUT = 11,
  AMENLAB_ERR_EMPTY_SET = 12,
  AMENLAB_ERR_EMPTY_SUPPORT = 13,
  AMENLAB_ERR_NO_LEVEL_SET = 14,
  AMENLAB_ERR_INTERNAL_INFEASIBLE = 15,
  AMENLAB_ERR_KEY_NOT_IN_K = 16,
  AMENLAB_ERR_UNSUPPORTED_FAMILY = 17,
  AMENLAB_ERR_PRECONDITION_FAILED = 18,
  AMENLAB_ERR_WRONG_MODE = 19,
  AMENLAB_ERR_OVERFLOW = 20,
  AMENLAB_ERR_NULL_ARGUMENT = 30,
  AMENLAB_ERR_INTERNAL = 31
} amenlab_status;

typedef struct amenlab_group amenlab_group;
typedef struct amenlab_harem amenlab_harem;
typedef struct amenlab_decomp amenlab_decomp;

AMENLAB_API const char* amenlab_last_error(void);
AMENLAB_API const char* amenlab_status_name(amenlab_status s);
AMENLAB_API void amenlab_string_free(char* s);
AMENLAB_API void amenlab_codes_free(uint64_t* codes);

/* ---- groups ------------------------------------------------------------ */

/* spec: free:<k> | zd:<d> | cyclic:<m> | lamplighter | redundant-z */
AMENLAB_API amenlab_status amenlab_group_new(const char* spec,
                                             amenlab_group** out);
/* The same family exposed with enumerable equality only. */
AMENLAB_API amenlab_status amenlab_group_as_ce(const amenlab_group* g,
                                               amenlab_group** out);
AMENLAB_API void amenlab_group_free(amenlab_group* g);
AMENLAB_API int amenlab_group_is_ce(const amenlab_group* g);

/* Element literals: generator words ("ab^-1", uppercase = inverse), "e",
 * integers for zd:1 and cyclic, tuples "(1,-2)" for zd:d. */
AMENLAB_API amenlab_status amenlab_group_parse(const amenlab_group* g,
                                               const char* literal,
                                               uint64_t* out);
/* Comma-separated literals, in input order (not deduplicated). */
AMENLAB_API amenlab_status amenlab_group_parse_list(const amenlab_group* g,
                                                    const char* text,
                                                    uint64_t** out,
                                                    size_t* count);
AMENLAB_API amenlab_status amenlab_group_format(const amenlab_group* g,
                                                uint64_t x, char** out);

AMENLAB_API amenlab_status amenlab_group_mult(const amenlab_group* g,
                                              uint64_t x, uint64_t y,
                                              uint64_t* out);
AMENLAB_API amenlab_status amenlab_group_inv(const amenlab_group* g,
                                             uint64_t x, uint64_t* out);
/* Computable groups only (AMENLAB_ERR_WRONG_MODE otherwise). */
AMENLAB_API amenlab_status amenlab_group_eq(const amenlab_group* g, uint64_t x,
                                            uint64_t y, int* equal);
/* AMENLAB_OK with *equal = 1, or AMENLAB_UNKNOWN. */
AMENLAB_API amenlab_status amenlab_group_eq_semidecide(const amenlab_group* g,
                                                       uint64_t x, uint64_t y,
                                                       uint64_t budget,
                                                       int* equal);
AMENLAB_API amenlab_status amenlab_group_ball(const amenlab_group* g,
                                              const uint64_t* gens,
                                              size_t n_gens, unsigned radius,
                                              uint64_t** out, size_t* count);

/* ---- Følner sets and Reiter functions ------------------------------------ */

/* *ok = 1 iff every |F\xF|/|F| <= 1/n. defects_json (optional) receives
 * {"<code>": "p/q", ...}. */
AMENLAB_API amenlab_status amenlab_is_n_folner(
    const amenlab_group* g, const uint64_t* F, size_t n_F, const uint64_t* D,
    size_t n_D, uint64_t n, int* ok, char** defects_json);
/* *ok = 1 iff every |F∩xF|/|F| > 1 - 1/n. */
AMENLAB_API amenlab_status amenlab_is_n_folner_complement(
    const amenlab_group* g, const uint64_t* F, size_t n_F, const uint64_t* D,
    size_t n_D, uint64_t n, int* ok);

/* Certificate JSON {spec, D, n, F, defects}. steps (optional) always
 * receives the oracle calls spent. */
AMENLAB_API amenlab_status amenlab_search_folner(const amenlab_group* g,
                                                 const uint64_t* D, size_t n_D,
                                                 uint64_t n, uint64_t budget,
                                                 char** certificate_json,
                                                 uint64_t* steps);
/* Report JSON {min_size, witness, scope, steps}. */
AMENLAB_API amenlab_status amenlab_folner_function(const amenlab_group* g,
                                                   const uint64_t* D,
                                                   size_t n_D, uint64_t n,
                                                   uint64_t budget,
                                                   char** report_json);
AMENLAB_API amenlab_status amenlab_folner_sequence(const amenlab_group* g,
                                                   uint64_t j, uint64_t budget,
                                                   char** certificate_json);

/* f_json: {"support": [...], "values": {"<code>": "p/q"}}.
 * Output {"<code>": "p/q"} per element of D. */
AMENLAB_API amenlab_status amenlab_reiter_defect(const amenlab_group* g,
                                                 const char* f_json,
                                                 const uint64_t* D, size_t n_D,
                                                 char** defects_json);
/* partition_json: [[codes], ...]; x⋆ is the group's multiplication.
 * Output "p/q". */
AMENLAB_API amenlab_status amenlab_partition_defect(const amenlab_group* g,
                                                    const char* f_json,
                                                    const char* partition_json,
                                                    uint64_t x,
                                                    char** rational);
/* CE groups. Report JSON {verdict, steps, merges, defects}; the status is
 * AMENLAB_UNKNOWN when the verdict is UNKNOWN (the report is still set). */
AMENLAB_API amenlab_status amenlab_kappa_verify(const amenlab_group* g,
                                                uint64_t n, const uint64_t* D,
                                                size_t n_D, const char* f_json,
                                                uint64_t budget,
                                                char** report_json);
AMENLAB_API amenlab_status amenlab_extract_folner(const amenlab_group* g,
                                                  const char* h_json,
                                                  const uint64_t* D, size_t n_D,
                                                  uint64_t n, uint64_t** out,
                                                  size_t* count);

/* Decides ν(n1)ν(n2) = ν(n3) in the CE presentation of g, with a Følner
 * oracle that searches g itself (g must be computable). */
AMENLAB_API amenlab_status amenlab_decide_mult(const amenlab_group* g,
                                               uint64_t n1, uint64_t n2,
                                               uint64_t n3, uint64_t budget,
                                               int* equal, char** report_json);

/* ---- harem matchings ------------------------------------------------------ */

/* Γ_K(g) (left g = 2g, right h = 2h+1, g ~ kg) with h(n) = slope*n +
 * intercept for n > 0. radius_cap 0 means no cap. */
AMENLAB_API amenlab_status amenlab_harem_new_cayley(
    const amenlab_group* g, const uint64_t* K, size_t n_K, unsigned k,
    int64_t slope, int64_t intercept, unsigned radius_cap, amenlab_harem** out);
AMENLAB_API void amenlab_harem_free(amenlab_harem* h);
AMENLAB_API amenlab_status amenlab_harem_step(amenlab_harem* h);
AMENLAB_API uint64_t amenlab_harem_steps(const amenlab_harem* h);
/* Partners of vertex v; AMENLAB_UNKNOWN when the budget (neighbour calls)
 * runs out. */
AMENLAB_API amenlab_status amenlab_harem_query(amenlab_harem* h, uint64_t v,
                                               uint64_t budget, uint64_t** out,
                                               size_t* count);
/* "L a -> b1,..,bk" / "R b -> a" lines. */
AMENLAB_API amenlab_status amenlab_harem_dump(const amenlab_harem* h,
                                              char** text);

/* ---- paradoxical decompositions -------------------------------------------- */

AMENLAB_API amenlab_status amenlab_decomp_build(const amenlab_group* g,
                                                const uint64_t* K0, size_t n_K0,
                                                uint64_t n, unsigned radius_cap,
                                                amenlab_decomp** out);
/* The first-letter decomposition of free:2 with K = {e, a^-1, b^-1}; n1 is
 * reported as 0. */
AMENLAB_API amenlab_status amenlab_decomp_classical(amenlab_decomp** out);
AMENLAB_API void amenlab_decomp_free(amenlab_decomp* d);
AMENLAB_API amenlab_status amenlab_decomp_key(const amenlab_decomp* d,
                                              uint64_t** K, size_t* count,
                                              uint64_t* n1);
/* side: 0 = A (θ1), 1 = B (θ2). *in = 1 iff m lies in the k-indexed set. */
AMENLAB_API amenlab_status amenlab_decomp_membership(amenlab_decomp* d,
                                                     uint64_t k, uint64_t m,
                                                     int side, uint64_t budget,
                                                     int* in);
/* Report JSON {n1, K, resolved, unresolved, violations}. */
AMENLAB_API amenlab_status amenlab_decomp_verify(amenlab_decomp* d,
                                                 uint64_t count,
                                                 uint64_t budget,
                                                 char** report_json);

/* ---- witnesses ----------------------------------------------------------- */

/* Verdict JSON {verdict, evidence, rationale}. */
AMENLAB_API amenlab_status amenlab_witness_commutation(const amenlab_group* g,
                                                       const uint64_t* K,
                                                       size_t n_K,
                                                       char** verdict_json);
/* Report JSON {result: "FOUND" | "NONE_FOUND", certificate | null, subsets,
 * steps}. Status AMENLAB_UNKNOWN (report still set, result "UNKNOWN") when
 * the budget ran out. */
AMENLAB_API amenlab_status amenlab_witness_refute(
    const amenlab_group* g, const uint64_t* K, size_t n_K, uint64_t n,
    uint64_t size_bound, uint64_t budget, char** report_json);
AMENLAB_API amenlab_status amenlab_subgroup_contains(const amenlab_group* g,
                                                     const uint64_t* K,
                                                     size_t n_K, uint64_t x,
                                                     int* member);
AMENLAB_API amenlab_status amenlab_restrict_folner(
    const amenlab_group* g, const uint64_t* K, size_t n_K, uint64_t n,
    const uint64_t* F_m, size_t n_F, uint64_t** out, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* AMENLAB_AMENLAB_H_ */

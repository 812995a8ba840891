/* C interface to the intersectlab library.
 *
 * Every function returning il_status records a message retrievable with
 * il_last_error() on failure. Strings handed out through char** parameters
 * are owned by the caller and released with il_string_free(). Rationals in
 * JSON output are objects {"num": "...", "den": "...", "decimal": "..."};
 * big integers are decimal strings. */
#ifndef INTERSECTLAB_H
#define INTERSECTLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(INTERSECTLAB_BUILDING)
#define IL_API __attribute__((visibility("default")))
#else
#define IL_API
#endif

typedef enum il_status {
  IL_OK = 0,
  IL_INVALID_ARGUMENT = 1,
  IL_CAP_EXCEEDED = 2,
  IL_PARSE_ERROR = 3,
  IL_PRECONDITION = 4,
  IL_UNDECIDABLE = 5,
  IL_INTERNAL = 6
} il_status;

typedef struct il_family il_family;
typedef struct il_search_report il_search_report;

typedef struct il_search_options {
  uint64_t cap;                    /* largest C(n,k) searched */
  int shift_reduction;             /* nonzero: search shifted families only */
  uint64_t uniqueness_cap;         /* largest C(n,k) for the star-uniqueness flag */
  uint64_t uniqueness_node_budget; /* 0 = unlimited */
  uint64_t node_budget;            /* 0 = unlimited; exceeding it is IL_CAP_EXCEEDED */
} il_search_options;

IL_API const char* il_last_error(void);
IL_API const char* il_status_name(il_status status);
IL_API void il_string_free(char* s);

/* Families. The text form is a header line "n=<n> k=<k|*>" followed by one
 * member per line as comma-separated elements. */
IL_API il_status il_family_parse(const char* text, il_family** out);
IL_API void il_family_free(il_family* fam);
IL_API il_status il_family_to_text(const il_family* fam, char** out);
IL_API size_t il_family_size(const il_family* fam);
IL_API int il_family_ground(const il_family* fam);
/* kind: "frankl" (k < 0 for the non-uniform version), "hmf", "star". */
IL_API il_status il_family_build(const char* kind, int n, int k, int r, int t, int i,
                                 il_family** out);
IL_API il_status il_family_is_rwise(const il_family* fam, int r, int t, int* out);
IL_API il_status il_family_is_shifted(const il_family* fam, int* out);
IL_API il_status il_family_is_t_star(const il_family* fam, int t, int* out);
IL_API il_status il_family_shift(const il_family* fam, int i, int j, il_family** out);
IL_API il_status il_family_shift_fixpoint(const il_family* fam, il_family** out);
IL_API il_status il_family_saturate(const il_family* fam, int r, int t, il_family** out);
IL_API il_status il_family_shadow(const il_family* fam, int b, il_family** out);
/* {"input_size","output_size","bound","bound_satisfied"}; bound is null when
 * the family is not r-wise t-intersecting or b > t. */
IL_API il_status il_family_shadow_report_json(const il_family* fam, int b, int r, int t,
                                              char** out);

/* Lattice paths to (n-k,k) against the line y = (r-1)x + t. */
IL_API il_status il_paths_count_json(int n, int k, int r, int t, char** out);
IL_API il_status il_paths_g_json(int n, int i, int r, int t, char** out);
IL_API il_status il_paths_ell_json(int r, int t, int i_max, char** out);

/* Random walks; p and tol are decimal or fraction strings such as "1/2". */
IL_API il_status il_walk_f_json(int n, int r, int t, const char* p, char** out);
IL_API il_status il_walk_gamma_json(int r, const char* p, const char* tol, char** out);
IL_API il_status il_walk_alpha_json(int r, const char* tol, char** out);

/* Threshold formulas and scans. */
IL_API il_status il_threshold_n0_json(int k, int r, int t, const char* tol, char** out);
IL_API il_status il_threshold_scan_a1_json(int k, int r, int t, int n_from, int n_to, char** out);
IL_API il_status il_threshold_crossover_json(int k, int t, int span, uint64_t cap, char** out);

/* Extremal search. */
IL_API void il_search_options_default(il_search_options* options);
IL_API il_status il_search_max(int n, int k, int r, int t, int nontrivial,
                               const il_search_options* options, il_search_report** out);
IL_API il_status il_search_max_nonuniform(int n, int r, int t, int nontrivial,
                                          il_search_report** out);
IL_API void il_search_report_free(il_search_report* report);
IL_API il_status il_search_report_optimum(const il_search_report* report, char** out);
IL_API uint64_t il_search_report_nodes(const il_search_report* report);
/* 1 or 0 when decided, -1 when unknown. */
IL_API int il_search_report_all_optima_are_t_stars(const il_search_report* report);
IL_API il_status il_search_report_witness(const il_search_report* report, il_family** out);
/* wall_time is included only when with_timing is nonzero, so the default
 * output is reproducible byte for byte. */
IL_API il_status il_search_report_json(const il_search_report* report, int with_timing,
                                       char** out);

/* Acceptance suites. */
IL_API il_status il_verify_suite_names(char** out);
/* Runs one suite or "all"; *passed is set to 1 when every check passed. */
IL_API il_status il_verify_run_json(const char* suite, int* passed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* INTERSECTLAB_H */

#ifndef BIGCELL_BIGCELL_H
#define BIGCELL_BIGCELL_H

/* C interface to the bigcell core. All functions return a bc_status; on
 * failure bc_last_error() describes the problem (thread-local). Output
 * strings are heap-allocated and must be released with bc_string_free.
 * Numbers cross the boundary as decimal strings, supernaturals and patch
 * expressions in their text formats. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bc_status {
  BC_OK = 0,
  BC_ERR_PARSE = 1,
  BC_ERR_DOMAIN = 2,
  BC_ERR_UNREPRESENTABLE = 3,
  BC_ERR_NONCONVERGENT = 4,
  BC_ERR_BUDGET = 5,
  BC_ERR_INTERNAL = 6
} bc_status;

typedef struct bc_snat bc_snat;   /* supernatural number */
typedef struct bc_patch bc_patch; /* patch-expressible subset of the space */

const char* bc_last_error(void);
void bc_string_free(char* s);

/* --- supernatural numbers --- */
bc_status bc_snat_parse(const char* text, bc_snat** out);
void bc_snat_free(bc_snat* s);
bc_status bc_snat_format(const bc_snat* s, char** out);
bc_status bc_snat_gcd(const bc_snat* a, const bc_snat* b, bc_snat** out);
bc_status bc_snat_lcm(const bc_snat* a, const bc_snat* b, bc_snat** out);
bc_status bc_snat_divides(const bc_snat* a, const bc_snat* b, int* out);
bc_status bc_snat_is_completely_infinite(const bc_snat* s, int* out);
/* valuation at a prime, as "inf" or a decimal string */
bc_status bc_snat_valuation(const bc_snat* s, const char* prime, char** out);

/* --- patches --- */
bc_status bc_patch_parse(const char* text, bc_patch** out);
void bc_patch_free(bc_patch* p);
bc_status bc_patch_format(const bc_patch* p, char** out);
bc_status bc_patch_member(const bc_snat* s, const bc_patch* p, int* out);

/* Witness in (base) ∩ p avoiding every excluded multiple (csv of naturals,
 * may be empty). *out is NULL when the trace is empty. */
bc_status bc_trace_witness(const char* base, const bc_patch* p,
                           const char* excluded_csv, char** out);

/* --- covers --- */
bc_status bc_cover_check(const char* base, const char* gens_csv,
                         const bc_patch* p, int* out);
bc_status bc_cover_subcover(const char* base, const char* gens_csv,
                            const bc_patch* p, char** out_csv);

/* "member", or "nonpoint base:<n> family:<csv>" */
bc_status bc_point_certificate(const bc_snat* s, const bc_patch* p, char** out);
bc_status bc_triv_zariski(const bc_patch* p, int* out);

/* --- poset embeddings --- */
/* Input: the poset text format; output: one "label value" line per element. */
bc_status bc_poset_embed(const char* poset_text, char** out);
bc_status bc_poset_verify(const char* poset_text, const char* map_text,
                          int* out);

/* --- limits along the big cell --- */
/* tail is "base,ratio" or the empty string for a prefix-only sequence */
bc_status bc_tower_snat(const char* chain_csv, const char* tail, char** out);
bc_status bc_pcfb_limit(const char* prefix_csv, const char* tail, char** out);
bc_status bc_cofinal_chain(const bc_snat* s, const char* length,
                           char** out_csv);

/* --- matrix tower --- */
/* Matrices are whitespace-separated row-major rationals; the element count
 * determines the (square) dimension, which is the stage degree. */
bc_status bc_mat_embed(const char* matrix_text, const char* target, char** out);
bc_status bc_mat_trace(const char* matrix_text, char** out);
/* Unit-image lists are n*n matrices of size m x m concatenated row-major in
 * unit order e_00, e_01, ..., e_{n-1,n-1}. */
bc_status bc_mat_conj(const char* phi_units, const char* psi_units,
                      const char* source, const char* target, char** out);
bc_status bc_mat_equivn(const char* g_text, const char* h_text,
                        const char* level, int* out);
/* assignment_text: one matrix per declared generator, concatenated */
bc_status bc_mat_rep(const char* presentation_text,
                     const char* assignment_text, int* out);

/* --- reference oracle and truncation --- */
bc_status bc_naive_cover(const char* base, const char* gens_csv,
                         const bc_patch* p, const char* universe_primes_csv,
                         const char* max_exp, int* out);
bc_status bc_truncate(const char* degrees_csv, const bc_snat* s,
                      char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* BIGCELL_BIGCELL_H */

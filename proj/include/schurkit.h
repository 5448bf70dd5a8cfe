/* schurkit: exact Schur functor calculus.
 *
 * Every function returns a status code. On failure the out parameters are
 * untouched (strings set to NULL) and sk_last_error() describes the problem
 * for the calling thread. Strings returned through out parameters belong to
 * the caller and are released with sk_string_free(). Results are JSON.
 */
#ifndef SCHURKIT_H
#define SCHURKIT_H

#ifdef __cplusplus
extern "C" {
#endif

#define SK_OK 0
#define SK_ERR_ARGUMENT 1
#define SK_ERR_PARSE 2
#define SK_ERR_LIMIT 3
#define SK_ERR_INTERNAL 4

const char* sk_version(void);

/* Message of the most recent failure on this thread; never NULL. */
const char* sk_last_error(void);

void sk_string_free(char* s);

/* Partitions are written "(3,2,1)", "[3,2,1]" or "3,2,1"; "()" is empty. */

/* Irreducible symmetric group character value on a conjugacy class. */
int sk_character(const char* lambda, const char* rho, char** out_json);

/* Full character table of degree n. */
int sk_character_table(int n, char** out_json);

int sk_irrep_dimension(const char* lambda, char** out_json);

int sk_lr_coefficient(const char* lambda, const char* mu, const char* nu,
                      char** out_json);
int sk_kronecker(const char* lambda, const char* mu, const char* nu, char** out_json);

/* Multiplicity tables: S_lambda of a direct sum or tensor product, and the
 * product of two Schur functors. Terms are {key: [shape...], multiplicity}. */
int sk_decompose_sum(const char* lambda, char** out_json);
int sk_decompose_tensor(const char* lambda, char** out_json);
int sk_decompose_pair(const char* mu, const char* nu, char** out_json);

/* Young symmetrizer as a group algebra element; optionally re-verifies that
 * it squares to itself. */
int sk_symmetrizer(const char* lambda, int check_idempotent, char** out_json);

/* Graded dimension of S_lambda on the (even|odd) super vector space.
 * dimension_cap <= 0 selects the default cap. */
int sk_schur_dimension(int even_dim, int odd_dim, const char* lambda,
                       long long dimension_cap, char** out_json);

/* Vanishing of S_lambda on a super space; oracle is "rank", "rectangle" or
 * "both" (both recomputes independently and reports agreement). */
int sk_vanishes(int even_dim, int odd_dim, const char* lambda, const char* oracle,
                long long dimension_cap, char** out_json);

/* Evaluates an expression ("1 (+) L", "S[2,1](ev(2))", "curve(1)", ...) to a
 * formal object or a vanishing verdict. */
int sk_eval(const char* expr, long long dimension_cap, char** out_json);

/* Schur/Kimura finiteness report of an object expression. search_bound <= 0
 * picks a bound from the certificates. */
int sk_motive_report(const char* expr, int search_bound, char** out_json);

/* Blowup of x along a center y of codimension codim >= 2. */
int sk_motive_blowup(const char* x_expr, const char* y_expr, int codim,
                     char** out_json);

/* Bounded chain complexes over Q or Q[x], as JSON:
 *   {"base": "Q[x]", "degrees": {"0": 1, "1": 1},
 *    "differentials": {"1": [["x"]]}}                                      */
typedef struct sk_complex sk_complex;

int sk_complex_parse(const char* json_text, sk_complex** out);
void sk_complex_free(sk_complex* c);
int sk_complex_to_json(const sk_complex* c, char** out_json);

/* Homology: per degree a free rank and the nonzero invariant factors. */
int sk_complex_homology(const sk_complex* c, char** out_json);

/* The subcomplex S_lambda of the |lambda|-th tensor power. */
int sk_complex_schur(const sk_complex* c, const char* lambda,
                     long long dimension_cap, sk_complex** out);

/* Level and graded ranks of the tensor-power filtration attached to a
 * degreewise split exact sequence. The bundle holds "p", "x", "q"
 * complexes plus "inclusion" and "projection" matrices by degree. */
int sk_filtration_report(const char* bundle_json, int n, long long dimension_cap,
                         char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SCHURKIT_H */

#ifndef BPSKALC_H
#define BPSKALC_H

/*
 * C interface to the bpskalc library. All functions return a status code;
 * results come back through out parameters. Polynomial handles are opaque
 * and must be released with bpsk_poly_free; strings returned through char**
 * out parameters must be released with bpsk_string_free.
 *
 * On any nonzero status the out parameters are left untouched and
 * bpsk_last_error() describes the failure for the calling thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

#define BPSK_OK 0
#define BPSK_ERR_INVALID_ARGUMENT 1
#define BPSK_ERR_DOMAIN 2
#define BPSK_ERR_PARSE 3
#define BPSK_ERR_INTERNAL 4

typedef struct bpsk_poly bpsk_poly;

/* Last error message for the calling thread; empty string when none. */
const char* bpsk_last_error(void);

void bpsk_poly_free(bpsk_poly* p);
void bpsk_string_free(char* s);

/* Symmetrization variable bound (also settable via BPSKALC_MAX_VARS). */
int bpsk_set_max_vars(int n);
int bpsk_get_max_vars(void);

/* Generators. The handle remembers (d, v) alongside the polynomial. */
int bpsk_a_element(int d, int v, bpsk_poly** out);
int bpsk_e_class(int d, int v, bpsk_poly** out);
int bpsk_p_element(int d, int v, int n, bpsk_poly** out);

/* Independent character-sum expansion of the same generator family. */
int bpsk_bwb_expand(int n, int d, int v, bpsk_poly** out);

/* Kernel product; kernel is "xi", "xip", or "w". */
int bpsk_shuffle_mul(const bpsk_poly* f, const bpsk_poly* g,
                     const char* kernel, bpsk_poly** out);

int bpsk_poly_equal(const bpsk_poly* f, const bpsk_poly* g, int* equal);
int bpsk_poly_zvars(const bpsk_poly* p, int* zvars);
int bpsk_poly_to_text(const bpsk_poly* p, char** out);
int bpsk_poly_to_json(const bpsk_poly* p, char** out);
/* Parse the canonical JSON form; v annotates the handle's degree slope. */
int bpsk_poly_from_json(const char* json_text, int v, bpsk_poly** out);

/*
 * Divisibility of e_class(d, v) by the full boundary factor. divisible gets
 * 0 or 1; report gets the quotient text on success or the failing factor.
 */
int bpsk_divcheck(int d, int v, int* divisible, char** report);

/*
 * Wheel substitution on e_class(d, v) at 0-based indices (i, j, k); variant
 * is "q1" or "q2". vanished gets 0 or 1; residual gets the canonical text of
 * the substituted polynomial.
 */
int bpsk_wheel(int d, int v, int i, int j, int k, const char* variant,
               int* vanished, char** residual);

/*
 * Coproduct compatibility checks. mode is "1236bis" (uses n, d, v, a, b),
 * "cor44" (uses a, b, c, e, d, v), or "primitive" (uses n, d, v). pass gets
 * 0 or 1.
 */
int bpsk_coproduct_check(const char* mode, int n, int d, int v, int a, int b,
                         int c, int e, int* pass);

/*
 * Primitive space in degree n of the symmetric-function bialgebra.
 * dimension gets the kernel dimension; basis gets a text expansion of a
 * basis vector in the elementary basis (empty when the dimension is zero).
 */
int bpsk_primitives(int n, int* dimension, char** basis);

/* Rank certificate for the shuffle-model primitive space at (n, d, v). */
int bpsk_phi_consistency(int n, int d, int v, unsigned seed, int* pass);

/* JSON array of the integral dominant lattice points at (d, w). */
int bpsk_magic_weights(int d, int w, char** json);

/*
 * Series coefficients to the given order as a JSON object with the
 * enumerated side and the product side. identical gets 0 or 1.
 */
int bpsk_dtseries(int order, char** json, int* identical);

/*
 * Full acceptance suite. report gets the per-criterion text; failed gets
 * the number of failed criteria.
 */
int bpsk_selftest(char** report, int* failed);

#ifdef __cplusplus
}
#endif

#endif

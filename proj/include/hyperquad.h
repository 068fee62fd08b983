/* hyperquad — hyperinterpolation with exactness-relaxed quadrature rules
 * on [-1,1] and the unit sphere S^2.
 *
 * C API for the shared library. All functions return a status code
 * (HQ_OK on success) unless documented otherwise; on failure a
 * human-readable message is available from hq_last_error(). Objects
 * returned through hq_*_create/make functions are owned by the caller
 * and must be released with the matching hq_*_release function.
 */
#ifndef HYPERQUAD_H
#define HYPERQUAD_H

#ifdef __cplusplus
extern "C" {
#endif

/* ---- status codes ------------------------------------------------- */

enum {
  HQ_OK = 0,
  HQ_ERR_INVALID_ARGUMENT = 1,
  HQ_ERR_DOMAIN = 2,            /* point outside the manifold            */
  HQ_ERR_EXACTNESS = 3,         /* rule exactness below what is required */
  HQ_ERR_LP_INFEASIBLE = 4,     /* exactness unattainable on the points  */
  HQ_ERR_LP_NEGATIVE = 5,       /* L1 weights violate positivity         */
  HQ_ERR_PARSE = 6,             /* malformed point-set data              */
  HQ_ERR_EIGEN = 7,             /* eigen-solver did not converge         */
  HQ_ERR_CAP = 8,               /* polynomial-space dimension cap hit    */
  HQ_ERR_MZ = 9,                /* MZ property fails (eta >= 1)          */
  HQ_ERR_IO = 10,
  HQ_ERR_HTTP = 11,
  HQ_ERR_INTERNAL = 12
};

enum {
  HQ_DOMAIN_INTERVAL = 0,       /* [-1,1], unit weight, V = 2            */
  HQ_DOMAIN_SPHERE = 1          /* S^2, area measure, V = 4*pi           */
};

const char* hq_version(void);
/* Message for the most recent failure on this thread ("" if none). */
const char* hq_last_error(void);
const char* hq_status_name(int status);

/* ---- opaque handles ------------------------------------------------ */

typedef struct hq_rule hq_rule;
typedef struct hq_hyper hq_hyper;
typedef struct hq_product_weights hq_product_weights;

/* Scalar function on the domain. `point` has `dim` entries (1 for the
 * interval, 3 for the sphere); `ctx` is the user pointer passed along. */
typedef double (*hq_fn)(const double* point, int dim, void* ctx);

/* ---- orthonormal bases --------------------------------------------- */

/* dim P_n: n+1 on the interval, (n+1)^2 on the sphere; <0 on error. */
long long hq_dim_poly_space(int domain, int n);

/* Legendre polynomial of the given degree, normalized to unit L2 norm
 * on [-1,1]. Requires |x| <= 1 (tolerance 1e-12). */
int hq_legendre_normalized(int degree, double x, double* out);

/* Real orthonormal spherical harmonic Y_{degree,order}, order in
 * [1, 2*degree+1]. `point` must be unit within 1e-12. */
int hq_sph_harmonic(int degree, int order, const double point[3], double* out);

/* All d_n basis values at `point` in flat-index order. `out` must hold
 * hq_dim_poly_space(domain, n) entries. */
int hq_basis_vector(int domain, int n, const double* point, double* out);

/* ---- quadrature rules ---------------------------------------------- */

/* m-point Gauss-Legendre on [-1,1] (Golub-Welsch), exactness 2m-1. */
int hq_rule_gauss_legendre(int m, hq_rule** out);
/* m-point Clenshaw-Curtis in the Chebyshev points (m >= 2), exactness m-1. */
int hq_rule_clenshaw_curtis(int m, hq_rule** out);
/* L1-minimal weights on given points with prescribed exactness degree.
 * `points` holds m*dim coordinates (row-major). Fails with
 * HQ_ERR_LP_INFEASIBLE / HQ_ERR_LP_NEGATIVE when no positive-weight
 * solution exists. */
int hq_rule_l1_minimal(int domain, const double* points, int m, int degree,
                       hq_rule** out);
/* Product Gauss x trapezoid rule on S^2 with exactness t. */
int hq_rule_tensor_sphere(int t, hq_rule** out);
/* Equal-weight rule from a spherical t-design point set ("x y z" rows,
 * '#' comments). Rows must be unit within 1e-8 (renormalized on load). */
int hq_rule_load_design_file(const char* path, int t, hq_rule** out);
int hq_rule_load_design_text(const char* text, int t, hq_rule** out);
void hq_rule_release(hq_rule* rule);

int hq_rule_domain(const hq_rule* rule);
int hq_rule_point_count(const hq_rule* rule);
int hq_rule_point_dim(const hq_rule* rule);
int hq_rule_claimed_exactness(const hq_rule* rule);
/* Largest degree passing the exactness audit (computed at construction). */
int hq_rule_verified_exactness(const hq_rule* rule);
int hq_rule_nodes(const hq_rule* rule, double* out);    /* m*dim entries */
int hq_rule_weights(const hq_rule* rule, double* out);  /* m entries     */
const char* hq_rule_id(const hq_rule* rule);
int hq_rule_warning_count(const hq_rule* rule);
const char* hq_rule_warning(const hq_rule* rule, int index);

/* Max over the d_degree basis functions of the rule's moment residual. */
int hq_verify_exactness(const hq_rule* rule, int degree, double* max_residual);

/* Marcinkiewicz-Zygmund constant: eta = ||G - I||_2 for the discrete
 * Gram matrix G of the degree-n basis under the rule. */
typedef struct {
  int n;
  double eta;
  double gram_residual_spectral_norm;  /* == eta */
  double max_exactness_residual;       /* residual at the verified degree */
  int exactness_degree_verified;
} hq_mz_report;
int hq_mz_eta(const hq_rule* rule, int n, hq_mz_report* out);

/* Minimal point counts for an exactness-(n+k) rule, 0 < k <= n:
 * `paper_bound`     d_{(n+k)/2} (n+k even) or d_{(n+k+1)/2} (odd),
 * `classical_bound` d_{floor((n+k)/2)} (the one asserted by tests). */
int hq_min_points_bound(int domain, int n, int k, long long* paper_bound,
                        long long* classical_bound);

/* Download-and-cache helper for design files. `base_url` may be NULL to
 * use the HYPERQUAD_DESIGN_URL environment variable. Writes the cached
 * file path into `path_out` (capacity `path_cap`). */
int hq_fetch_design(const char* name, const char* base_url,
                    const char* cache_dir, char* path_out, int path_cap);

/* ---- hyperinterpolation -------------------------------------------- */

/* Weighted discrete inner product sum_j w_j u_j v_j over the rule nodes. */
int hq_discrete_inner_product(const hq_rule* rule, const double* u,
                              const double* v, int len, double* out);

/* Degree-n hyperinterpolant of f. Refuses rules whose verified exactness
 * is below n+1 (HQ_ERR_EXACTNESS) unless `force` is nonzero. */
int hq_hyperinterpolate(const hq_rule* rule, int n, hq_fn f, void* ctx,
                        int force, hq_hyper** out);
/* Same, from precomputed nodal samples (length = point count). */
int hq_hyperinterpolate_samples(const hq_rule* rule, int n,
                                const double* samples, int len, int force,
                                hq_hyper** out);
void hq_hyper_release(hq_hyper* h);

int hq_hyper_domain(const hq_hyper* h);
int hq_hyper_degree(const hq_hyper* h);
long long hq_hyper_coeff_count(const hq_hyper* h);
int hq_hyper_coeffs(const hq_hyper* h, double* out);
int hq_hyper_rule_exactness(const hq_hyper* h);
const char* hq_hyper_rule_id(const hq_hyper* h);
int hq_hyper_eval(const hq_hyper* h, const double* point, double* out);
/* Parseval: the L2 norm equals the Euclidean norm of the coefficients. */
int hq_hyper_l2_norm(const hq_hyper* h, double* out);
int hq_hyper_truncate(const hq_hyper* h, int k, hq_hyper** out);

/* Quadrature error sigma_{n,k,f} of the rule on (L_n f - L_k f)^2. */
int hq_sigma(const hq_rule* rule, int n, int k, hq_fn f, void* ctx,
             double* out);

/* ---- product integration ------------------------------------------- */

/* Modified weights W_j = w_j sum_l p_l(x_j) h_moments[l] for integrals
 * of h*f. `h_moments[l]` = integral of h * p_l over the domain. */
int hq_product_weights_make(const hq_rule* rule, int n,
                            const double* h_moments, int len,
                            hq_product_weights** out);
/* Moments computed from a smooth h with a high-exactness reference rule. */
int hq_product_weights_smooth(const hq_rule* rule, int n, hq_fn h, void* ctx,
                              hq_product_weights** out);
void hq_product_weights_release(hq_product_weights* pw);
int hq_product_weights_count(const hq_product_weights* pw);
int hq_product_weights_get(const hq_product_weights* pw, double* out);
/* sum_j W_j f(x_j). */
int hq_product_integral(const hq_product_weights* pw, hq_fn f, void* ctx,
                        double* out);

/* ---- error analysis ------------------------------------------------ */

/* L2 residual ||L_n f - f|| integrated with `reference` (NULL selects a
 * default rule of exactness >= 4n+20). */
int hq_l2_error(const hq_hyper* h, hq_fn f, void* ctx,
                const hq_rule* reference, double* out);
/* Sup residual on the analysis grid (4096 Chebyshev points / 120x240). */
int hq_sup_error(const hq_hyper* h, hq_fn f, void* ctx, double* out);
/* Computable upper bound on the best uniform error E_k(f). */
int hq_best_uniform_upper(int domain, hq_fn f, void* ctx, int k, double* out);
/* Dense-grid estimate of ||f||_inf. */
int hq_sup_norm(int domain, hq_fn f, void* ctx, double* out);

typedef struct {
  int n;
  int k;
  double eta;        /* measured MZ constant of the rule at degree n   */
  double l2_error;
  double sup_error;
  double e_k_upper;  /* computable upper bound on E_k(f)               */
  double bound_rhs;  /* (1/sqrt(1-eta)+1) * sqrt(V) * e_k_upper        */
  int satisfied;     /* l2_error <= bound_rhs (roundoff allowance)     */
} hq_certificate;

/* Assemble an error certificate. Requires verified exactness >= n+k and
 * measured eta < 1 (otherwise HQ_ERR_MZ: the bound does not apply). */
int hq_certify(const hq_rule* rule, int n, int k, hq_fn f, void* ctx,
               const hq_rule* reference, hq_certificate* out);

/* ---- built-in test functions ---------------------------------------- */

/* (1-r)_+^4 (4r+1) with r the distance to the north pole (0,0,1). */
double hq_wendland(const double point[3]);
/* Named test functions: "exp_neg_x2", "abs_x", "wendland_sphere".
 * The returned function ignores `ctx`. */
int hq_test_function(const char* name, hq_fn* fn_out);

#ifdef __cplusplus
}
#endif

#endif /* HYPERQUAD_H */

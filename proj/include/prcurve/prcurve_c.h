/* C API for the precision-recall curve toolkit.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns a prc_status; on failure the out-parameters
 * are untouched and prc_last_error() describes the problem for the calling
 * thread. Handles are immutable after creation and safe to share across
 * threads.
 */
#ifndef PRCURVE_C_H
#define PRCURVE_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PRC_API __declspec(dllexport)
#else
#define PRC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum prc_status {
  PRC_OK = 0,
  PRC_INVALID_ARGUMENT = 1,
  PRC_IO_ERROR = 2,
  PRC_INTERNAL_ERROR = 3
} prc_status;

typedef enum prc_method {
  PRC_METHOD_IPR = 0,
  PRC_METHOD_KNN = 1,
  PRC_METHOD_PARZEN = 2,
  PRC_METHOD_COVERAGE = 3
} prc_method;

typedef enum prc_k_rule { PRC_K_FIXED = 0, PRC_K_SQRT_N = 1 } prc_k_rule;

typedef enum prc_extreme_kind {
  PRC_EXTREME_IPR = 0,
  PRC_EXTREME_COVERAGE = 1,
  PRC_EXTREME_EAS = 2,
  PRC_EXTREME_PRC = 3,
  PRC_EXTREME_PPR = 4
} prc_extreme_kind;

typedef enum prc_ppr_form {
  PRC_PPR_COMPLEMENT = 0,
  PRC_PPR_AS_WRITTEN = 1
} prc_ppr_form;

typedef enum prc_preset {
  PRC_PRESET_SHIFT = 0,
  PRC_PRESET_GMM = 1,
  PRC_PRESET_OUTLIER = 2,
  PRC_PRESET_HIGHDIM = 3,
  PRC_PRESET_PQ_EQUAL = 4,
  PRC_PRESET_SCALE = 5,
  PRC_PRESET_CUSTOM = 6
} prc_preset;

typedef struct prc_grid prc_grid;
typedef struct prc_spec prc_spec;
typedef struct prc_samples prc_samples;
typedef struct prc_curve prc_curve;

PRC_API const char* prc_version(void);

/* Message for the most recent failure on this thread; never NULL. */
PRC_API const char* prc_last_error(void);

/* ---- lambda grids ---- */
PRC_API prc_status prc_grid_create(int n_points, prc_grid** out);
PRC_API void prc_grid_destroy(prc_grid* grid);
PRC_API size_t prc_grid_size(const prc_grid* grid);
PRC_API prc_status prc_grid_lambda(const prc_grid* grid, size_t i, double* out);

/* ---- distribution specs ---- */
PRC_API prc_status prc_spec_create_gaussian(int d, const double* mu_or_null,
                                            prc_spec** out);
PRC_API prc_status prc_spec_create_scaled(int d, double psi, prc_spec** out);
/* weights: n_components doubles; centers: n_components * d, row-major */
PRC_API prc_status prc_spec_create_gmm(int d, int n_components, const double* weights,
                                       const double* centers, prc_spec** out);
PRC_API void prc_spec_destroy(prc_spec* spec);
PRC_API prc_status prc_log_density_ratio(const prc_spec* p, const prc_spec* q,
                                         const double* z, int d, double* out);

/* ---- sample sets ---- */
PRC_API prc_status prc_samples_create(size_t n, size_t d, const double* row_major,
                                      prc_samples** out);
PRC_API prc_status prc_samples_draw(const prc_spec* spec, size_t n, uint64_t seed,
                                    const double* outlier_or_null, prc_samples** out);
PRC_API prc_status prc_samples_read(const char* path, prc_samples** out);
PRC_API prc_status prc_samples_write_csv(const prc_samples* s, const char* path);
PRC_API prc_status prc_samples_write_bin(const prc_samples* s, const char* path);
PRC_API void prc_samples_destroy(prc_samples* s);
PRC_API size_t prc_samples_n(const prc_samples* s);
PRC_API size_t prc_samples_dim(const prc_samples* s);
PRC_API const double* prc_samples_data(const prc_samples* s);

/* ---- curves ---- */
PRC_API void prc_curve_destroy(prc_curve* curve);
PRC_API size_t prc_curve_size(const prc_curve* curve);
PRC_API prc_status prc_curve_point(const prc_curve* curve, size_t i, double* lambda,
                                   double* alpha, double* beta);
PRC_API prc_status prc_curve_write_csv(const prc_curve* curve, const char* path);
PRC_API prc_status prc_curve_read_csv(const char* path, prc_curve** out);

/* ---- oracles ---- */
PRC_API prc_status prc_chi_tail(int d, double t, double* out);
PRC_API prc_status prc_analytic_alpha_scale(double psi, double lambda, int d, double* out);
PRC_API prc_status prc_analytic_curve_scale(double psi, int d, const prc_grid* grid,
                                            prc_curve** out);
PRC_API prc_status prc_gt_curve_mc(const prc_spec* p, const prc_spec* q, size_t n_gt,
                                   const prc_grid* grid, uint64_t seed, prc_curve** out);
PRC_API prc_status prc_chernoff_coefficient(double psi, double* coefficient,
                                            double* argmin_gamma, double* divergence);
PRC_API prc_status prc_chernoff_bound(double psi, double lambda, int d, double gamma,
                                      double* out);

/* ---- estimation ---- */
typedef struct prc_estimator_config {
  prc_method method;
  prc_k_rule k_rule;
  int k;              /* used when k_rule == PRC_K_FIXED */
  double split_ratio; /* training fraction in (0, 1]; 1 = no split */
  int lambda_points;
  int gamma_points;
  int parzen_k; /* < 1: reuse the resolved k */
  uint64_t seed;
} prc_estimator_config;

PRC_API void prc_estimator_config_init(prc_estimator_config* cfg);
PRC_API prc_status prc_estimate_curve(const prc_samples* x, const prc_samples* y,
                                      const prc_estimator_config* cfg, prc_curve** out);
PRC_API prc_status prc_extreme_scalar(prc_extreme_kind kind, const prc_samples* x,
                                      const prc_samples* y, int k, int k_prime,
                                      prc_ppr_form ppr_form, double* out);

/* ---- summaries ---- */
PRC_API prc_status prc_curve_area(const prc_curve* curve, double* out);
PRC_API prc_status prc_f_score(const prc_curve* curve, double b, double* out);
PRC_API prc_status prc_pr_median(const prc_curve* curve, double* lambda, double* alpha,
                                 double* beta);
PRC_API prc_status prc_curve_iou(const prc_curve* a, const prc_curve* b, double* out);
PRC_API prc_status prc_curve_extremes(const prc_curve* curve, double* alpha_inf,
                                      double* beta_0);

/* ---- consistency ---- */
PRC_API prc_status prc_mu_lambda(double p, int k, double lambda, double* out);
PRC_API prc_status prc_mu_lambda_limit(double p, double lambda, double* out);
PRC_API prc_status prc_mu_lambda_bound(double p, int k, double lambda, double* out);
PRC_API prc_status prc_asymptotic_knn_risk(const prc_spec* p, const prc_spec* q, int k,
                                           double lambda, size_t n_mc, uint64_t seed,
                                           double* out);

/* ---- experiments ---- */
typedef struct prc_experiment_config {
  prc_preset preset;
  size_t n;       /* 0: preset default */
  int dim;        /* 0: preset default */
  double shift;   /* NAN: preset default */
  double psi;     /* NAN: preset default */
  int n_seeds;    /* 0: preset default */
  uint64_t seed;  /* master seed */
  prc_k_rule k_rule;
  int k;
  int use_k_rule; /* 0: preset default k rule */
  double split_ratio; /* NAN: preset default */
  int lambda_points;  /* 0: preset default */
  int gamma_points;   /* 0: preset default */
  size_t n_gt;        /* 0: preset default */
  const char* methods; /* comma list, e.g. "ipr,knn"; NULL: preset default */
} prc_experiment_config;

PRC_API void prc_experiment_config_init(prc_experiment_config* cfg);
PRC_API prc_status prc_experiment_run(const prc_experiment_config* cfg,
                                      const char* out_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PRCURVE_C_H */

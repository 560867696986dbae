#include "prcurve/prcurve_c.h"

#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>

#include "prcurve/chernoff.hpp"
#include "prcurve/consistency.hpp"
#include "prcurve/curve.hpp"
#include "prcurve/estimation.hpp"
#include "prcurve/experiment.hpp"
#include "prcurve/gaussian_scale.hpp"
#include "prcurve/grid.hpp"
#include "prcurve/ground_truth.hpp"
#include "prcurve/io.hpp"
#include "prcurve/sampling.hpp"
#include "prcurve/summary.hpp"
#include "prcurve/version.hpp"

using namespace prcurve;

struct prc_grid {
  LambdaGrid grid;
};
struct prc_spec {
  DistributionSpec spec;
};
struct prc_samples {
  SampleSet set;
};
struct prc_curve {
  PrCurve curve;
};

namespace {

thread_local std::string g_last_error = "no error";

prc_status fail(prc_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
prc_status guarded(Fn&& fn) {
  try {
    fn();
    return PRC_OK;
  } catch (const std::invalid_argument& e) {
    return fail(PRC_INVALID_ARGUMENT, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(PRC_IO_ERROR, e.what());
  } catch (const std::runtime_error& e) {
    return fail(PRC_IO_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(PRC_INTERNAL_ERROR, e.what());
  }
}

Method to_method(prc_method m) {
  switch (m) {
    case PRC_METHOD_IPR: return Method::ipr;
    case PRC_METHOD_KNN: return Method::knn;
    case PRC_METHOD_PARZEN: return Method::parzen;
    case PRC_METHOD_COVERAGE: return Method::coverage;
  }
  throw std::invalid_argument("unknown method");
}

std::vector<Method> parse_methods(const char* csv) {
  std::vector<Method> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "ipr") out.push_back(Method::ipr);
    else if (tok == "knn") out.push_back(Method::knn);
    else if (tok == "parzen") out.push_back(Method::parzen);
    else if (tok == "coverage") out.push_back(Method::coverage);
    else if (!tok.empty()) throw std::invalid_argument("unknown method: " + tok);
  }
  if (out.empty()) throw std::invalid_argument("empty method list");
  return out;
}

}  // namespace

extern "C" {

const char* prc_version(void) { return PRCURVE_VERSION_STRING; }

const char* prc_last_error(void) { return g_last_error.c_str(); }

prc_status prc_grid_create(int n_points, prc_grid** out) {
  if (!out) return fail(PRC_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = new prc_grid{make_lambda_grid(n_points)}; });
}

void prc_grid_destroy(prc_grid* grid) { delete grid; }

size_t prc_grid_size(const prc_grid* grid) { return grid ? grid->grid.size() : 0; }

prc_status prc_grid_lambda(const prc_grid* grid, size_t i, double* out) {
  if (!grid || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  if (i >= grid->grid.size()) return fail(PRC_INVALID_ARGUMENT, "index out of range");
  *out = grid->grid.lambdas[i];
  return PRC_OK;
}

prc_status prc_spec_create_gaussian(int d, const double* mu_or_null, prc_spec** out) {
  if (!out) return fail(PRC_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    std::vector<double> mu(d > 0 ? d : 0, 0.0);
    if (mu_or_null) mu.assign(mu_or_null, mu_or_null + d);
    *out = new prc_spec{DistributionSpec::shifted_gaussian(d, std::move(mu))};
  });
}

prc_status prc_spec_create_scaled(int d, double psi, prc_spec** out) {
  if (!out) return fail(PRC_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = new prc_spec{DistributionSpec::scaled_gaussian(d, psi)}; });
}

prc_status prc_spec_create_gmm(int d, int n_components, const double* weights,
                               const double* centers, prc_spec** out) {
  if (!out || !weights || !centers) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    std::vector<GmmComponent> comps;
    for (int c = 0; c < n_components; ++c) {
      comps.push_back({weights[c],
                       std::vector<double>(centers + c * d, centers + (c + 1) * d)});
    }
    *out = new prc_spec{DistributionSpec::gmm(d, std::move(comps))};
  });
}

void prc_spec_destroy(prc_spec* spec) { delete spec; }

prc_status prc_log_density_ratio(const prc_spec* p, const prc_spec* q, const double* z,
                                 int d, double* out) {
  if (!p || !q || !z || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    *out = log_density_ratio(p->spec, q->spec, {z, static_cast<size_t>(d)});
  });
}

prc_status prc_samples_create(size_t n, size_t d, const double* row_major,
                              prc_samples** out) {
  if (!out || !row_major) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    *out = new prc_samples{SampleSet(std::vector<double>(row_major, row_major + n * d),
                                     n, d)};
  });
}

prc_status prc_samples_draw(const prc_spec* spec, size_t n, uint64_t seed,
                            const double* outlier_or_null, prc_samples** out) {
  if (!spec || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    std::optional<std::vector<double>> outlier;
    if (outlier_or_null)
      outlier.emplace(outlier_or_null, outlier_or_null + spec->spec.dim());
    *out = new prc_samples{sample(spec->spec, n, seed, outlier)};
  });
}

prc_status prc_samples_read(const char* path, prc_samples** out) {
  if (!path || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { *out = new prc_samples{read_matrix_auto(path)}; });
}

prc_status prc_samples_write_csv(const prc_samples* s, const char* path) {
  if (!s || !path) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { write_matrix_csv(path, s->set); });
}

prc_status prc_samples_write_bin(const prc_samples* s, const char* path) {
  if (!s || !path) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { write_matrix_bin(path, s->set); });
}

void prc_samples_destroy(prc_samples* s) { delete s; }

size_t prc_samples_n(const prc_samples* s) { return s ? s->set.n : 0; }

size_t prc_samples_dim(const prc_samples* s) { return s ? s->set.d : 0; }

const double* prc_samples_data(const prc_samples* s) {
  return s ? s->set.data.data() : nullptr;
}

void prc_curve_destroy(prc_curve* curve) { delete curve; }

size_t prc_curve_size(const prc_curve* curve) { return curve ? curve->curve.size() : 0; }

prc_status prc_curve_point(const prc_curve* curve, size_t i, double* lambda,
                           double* alpha, double* beta) {
  if (!curve || !lambda || !alpha || !beta)
    return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  if (i >= curve->curve.size()) return fail(PRC_INVALID_ARGUMENT, "index out of range");
  const CurvePoint& p = curve->curve.points()[i];
  *lambda = p.lambda;
  *alpha = p.alpha;
  *beta = p.beta;
  return PRC_OK;
}

prc_status prc_curve_write_csv(const prc_curve* curve, const char* path) {
  if (!curve || !path) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { write_curve_file(path, curve->curve.points()); });
}

prc_status prc_curve_read_csv(const char* path, prc_curve** out) {
  if (!path || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { *out = new prc_curve{read_curve_file(path)}; });
}

prc_status prc_chi_tail(int d, double t, double* out) {
  if (!out) return fail(PRC_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = chi_tail(d, t); });
}

prc_status prc_analytic_alpha_scale(double psi, double lambda, int d, double* out) {
  if (!out) return fail(PRC_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = analytic_alpha_scale(psi, lambda, d); });
}

prc_status prc_analytic_curve_scale(double psi, int d, const prc_grid* grid,
                                    prc_curve** out) {
  if (!grid || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    *out = new prc_curve{analytic_curve_scale(psi, d, grid->grid)};
  });
}

prc_status prc_gt_curve_mc(const prc_spec* p, const prc_spec* q, size_t n_gt,
                           const prc_grid* grid, uint64_t seed, prc_curve** out) {
  if (!p || !q || !grid || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    *out = new prc_curve{gt_curve_mc(p->spec, q->spec, n_gt, grid->grid, seed)};
  });
}

prc_status prc_chernoff_coefficient(double psi, double* coefficient,
                                    double* argmin_gamma, double* divergence) {
  if (!coefficient || !argmin_gamma || !divergence)
    return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    const ChernoffResult r = chernoff_coefficient(psi);
    *coefficient = r.coefficient;
    *argmin_gamma = r.argmin_gamma;
    *divergence = r.divergence;
  });
}

prc_status prc_chernoff_bound(double psi, double lambda, int d, double gamma,
                              double* out) {
  if (!out) return fail(PRC_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = chernoff_bound(psi, lambda, d, gamma); });
}

void prc_estimator_config_init(prc_estimator_config* cfg) {
  if (!cfg) return;
  cfg->method = PRC_METHOD_KNN;
  cfg->k_rule = PRC_K_SQRT_N;
  cfg->k = 4;
  cfg->split_ratio = 0.5;
  cfg->lambda_points = 201;
  cfg->gamma_points = 201;
  cfg->parzen_k = -1;
  cfg->seed = 0;
}

prc_status prc_estimate_curve(const prc_samples* x, const prc_samples* y,
                              const prc_estimator_config* cfg, prc_curve** out) {
  if (!x || !y || !cfg || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    EstimatorConfig ec;
    ec.method = to_method(cfg->method);
    ec.k_rule = cfg->k_rule == PRC_K_SQRT_N ? KRule::sqrt_n() : KRule::fixed(cfg->k);
    ec.split_ratio = cfg->split_ratio;
    ec.lambda_points = cfg->lambda_points;
    ec.gamma_points = cfg->gamma_points;
    ec.parzen_k = cfg->parzen_k;
    ec.seed = cfg->seed;
    *out = new prc_curve{estimate_curve(x->set, y->set, ec)};
  });
}

prc_status prc_extreme_scalar(prc_extreme_kind kind, const prc_samples* x,
                              const prc_samples* y, int k, int k_prime,
                              prc_ppr_form ppr_form, double* out) {
  if (!x || !y || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    ExtremeParams params;
    params.k = k;
    params.k_prime = k_prime;
    params.ppr_form =
        ppr_form == PRC_PPR_AS_WRITTEN ? PprForm::as_written : PprForm::complement;
    ExtremeKind ek;
    switch (kind) {
      case PRC_EXTREME_IPR: ek = ExtremeKind::ipr; break;
      case PRC_EXTREME_COVERAGE: ek = ExtremeKind::coverage; break;
      case PRC_EXTREME_EAS: ek = ExtremeKind::eas; break;
      case PRC_EXTREME_PRC: ek = ExtremeKind::prc; break;
      case PRC_EXTREME_PPR: ek = ExtremeKind::ppr; break;
      default: throw std::invalid_argument("unknown extreme kind");
    }
    *out = extreme_scalar(ek, x->set, y->set, params);
  });
}

prc_status prc_curve_area(const prc_curve* curve, double* out) {
  if (!curve || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { *out = curve_area(curve->curve.clamped_unit()); });
}

prc_status prc_f_score(const prc_curve* curve, double b, double* out) {
  if (!curve || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { *out = f_score(curve->curve, b); });
}

prc_status prc_pr_median(const prc_curve* curve, double* lambda, double* alpha,
                         double* beta) {
  if (!curve || !lambda || !alpha || !beta)
    return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    const PrMedianPoint p = pr_median(curve->curve);
    *lambda = p.lambda;
    *alpha = p.alpha;
    *beta = p.beta;
  });
}

prc_status prc_curve_iou(const prc_curve* a, const prc_curve* b, double* out) {
  if (!a || !b || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { *out = curve_iou(a->curve, b->curve); });
}

prc_status prc_curve_extremes(const prc_curve* curve, double* alpha_inf, double* beta_0) {
  if (!curve || !alpha_inf || !beta_0) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    const auto ext = extremes(curve->curve);
    *alpha_inf = ext.first;
    *beta_0 = ext.second;
  });
}

prc_status prc_mu_lambda(double p, int k, double lambda, double* out) {
  if (!out) return fail(PRC_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = mu_lambda(p, k, lambda); });
}

prc_status prc_mu_lambda_limit(double p, double lambda, double* out) {
  if (!out) return fail(PRC_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = mu_lambda_limit(p, lambda); });
}

prc_status prc_mu_lambda_bound(double p, int k, double lambda, double* out) {
  if (!out) return fail(PRC_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = mu_lambda_bound(p, k, lambda); });
}

prc_status prc_asymptotic_knn_risk(const prc_spec* p, const prc_spec* q, int k,
                                   double lambda, size_t n_mc, uint64_t seed,
                                   double* out) {
  if (!p || !q || !out) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    *out = asymptotic_knn_risk(p->spec, q->spec, k, lambda, n_mc, seed);
  });
}

void prc_experiment_config_init(prc_experiment_config* cfg) {
  if (!cfg) return;
  cfg->preset = PRC_PRESET_SHIFT;
  cfg->n = 0;
  cfg->dim = 0;
  cfg->shift = std::nan("");
  cfg->psi = std::nan("");
  cfg->n_seeds = 0;
  cfg->seed = 1;
  cfg->k_rule = PRC_K_SQRT_N;
  cfg->k = 4;
  cfg->use_k_rule = 0;
  cfg->split_ratio = std::nan("");
  cfg->lambda_points = 0;
  cfg->gamma_points = 0;
  cfg->n_gt = 0;
  cfg->methods = nullptr;
}

prc_status prc_experiment_run(const prc_experiment_config* cfg, const char* out_dir) {
  if (!cfg || !out_dir) return fail(PRC_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    Preset preset;
    switch (cfg->preset) {
      case PRC_PRESET_SHIFT: preset = Preset::shift; break;
      case PRC_PRESET_GMM: preset = Preset::gmm; break;
      case PRC_PRESET_OUTLIER: preset = Preset::outlier; break;
      case PRC_PRESET_HIGHDIM: preset = Preset::highdim; break;
      case PRC_PRESET_PQ_EQUAL: preset = Preset::pq_equal; break;
      case PRC_PRESET_SCALE: preset = Preset::scale; break;
      case PRC_PRESET_CUSTOM: preset = Preset::custom; break;
      default: throw std::invalid_argument("unknown preset");
    }
    PresetOptions opt;
    if (cfg->n > 0) opt.n = cfg->n;
    if (cfg->dim > 0) opt.dim = cfg->dim;
    if (!std::isnan(cfg->shift)) opt.shift = cfg->shift;
    if (!std::isnan(cfg->psi)) opt.psi = cfg->psi;
    if (cfg->n_seeds > 0) opt.n_seeds = cfg->n_seeds;
    opt.seed = cfg->seed;
    if (cfg->use_k_rule)
      opt.k_rule = cfg->k_rule == PRC_K_SQRT_N ? KRule::sqrt_n() : KRule::fixed(cfg->k);
    if (!std::isnan(cfg->split_ratio)) opt.split_ratio = cfg->split_ratio;
    if (cfg->lambda_points > 0) opt.lambda_points = cfg->lambda_points;
    if (cfg->gamma_points > 0) opt.gamma_points = cfg->gamma_points;
    if (cfg->n_gt > 0) opt.n_gt = cfg->n_gt;
    if (cfg->methods) opt.methods = parse_methods(cfg->methods);
    run_experiment_to_dir(make_preset(preset, opt), out_dir);
  });
}

}  // extern "C"

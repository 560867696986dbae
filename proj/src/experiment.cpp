#include "prcurve/experiment.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "prcurve/gaussian_scale.hpp"
#include "prcurve/grid.hpp"
#include "prcurve/ground_truth.hpp"
#include "prcurve/io.hpp"
#include "prcurve/sampling.hpp"
#include "prcurve/version.hpp"

namespace prcurve {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::uint64_t kSeedStride = 2654435761ull;
constexpr std::uint64_t kGtSeedSalt = 0x67745f736565641dull;

std::vector<double> ones(int d, double value) {
  return std::vector<double>(static_cast<std::size_t>(d), value);
}

PrCurve ideal_curve(const LambdaGrid& grid) {
  std::vector<CurvePoint> pts;
  pts.reserve(grid.size());
  for (double lambda : grid.lambdas) {
    const double alpha = std::min(lambda, 1.0);
    pts.push_back({lambda, alpha, alpha / lambda});
  }
  return PrCurve(std::move(pts), CurveKind::analytic);
}

json spec_to_json(const DistributionSpec& s) {
  json j;
  j["d"] = s.dim();
  switch (s.variant()) {
    case DistributionSpec::Variant::shifted_gaussian:
      j["variant"] = "shifted_gaussian";
      j["mu"] = s.mu();
      break;
    case DistributionSpec::Variant::scaled_gaussian:
      j["variant"] = "scaled_gaussian";
      j["psi"] = s.psi();
      break;
    case DistributionSpec::Variant::gmm: {
      j["variant"] = "gmm";
      json comps = json::array();
      for (const auto& c : s.components())
        comps.push_back({{"weight", c.weight}, {"center", c.center}});
      j["components"] = comps;
      break;
    }
  }
  return j;
}

json summary_to_json(const SummaryReport& r) {
  json j;
  j["f_b"] = r.f_b;
  j["f_inv_b"] = r.f_inv_b;
  j["b"] = r.b;
  j["pr_median_lambda"] = r.median.lambda;
  j["pr_median_alpha"] = r.median.alpha;
  j["pr_median_beta"] = r.median.beta;
  j["alpha_inf_hat"] = r.alpha_inf_hat;
  j["beta_0_hat"] = r.beta_0_hat;
  if (r.iou_vs_reference) j["iou_vs_gt"] = *r.iou_vs_reference;
  return j;
}

json config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["preset"] = preset_name(cfg.preset);
  j["p_spec"] = spec_to_json(cfg.p_spec);
  j["q_spec"] = spec_to_json(cfg.q_spec);
  j["n"] = cfg.n;
  j["n_seeds"] = cfg.n_seeds;
  j["master_seed"] = cfg.master_seed;
  j["n_gt"] = cfg.n_gt;
  j["split_ratio"] = cfg.est.split_ratio;
  j["k_rule"] = cfg.est.k_rule.kind == KRule::Kind::sqrt_n ? "sqrt_n" : "fixed";
  if (cfg.est.k_rule.kind == KRule::Kind::fixed) j["k"] = cfg.est.k_rule.k;
  j["lambda_points"] = cfg.est.lambda_points;
  j["gamma_points"] = cfg.est.gamma_points;
  json methods = json::array();
  for (Method m : cfg.methods) methods.push_back(method_name(m));
  j["methods"] = methods;
  if (cfg.outlier) j["outlier"] = *cfg.outlier;
  return j;
}

PrCurve ground_truth(const ExperimentConfig& cfg, const LambdaGrid& grid) {
  switch (cfg.gt_mode) {
    case GtMode::ideal:
      return ideal_curve(grid);
    case GtMode::analytic_scale:
      return analytic_curve_scale(cfg.psi, static_cast<int>(cfg.p_spec.dim()), grid);
    case GtMode::mc:
      return gt_curve_mc(cfg.p_spec, cfg.q_spec, cfg.n_gt, grid,
                         cfg.master_seed ^ kGtSeedSalt);
  }
  throw std::logic_error("ground_truth: unknown mode");
}

}  // namespace

const char* preset_name(Preset p) {
  switch (p) {
    case Preset::shift: return "shift";
    case Preset::gmm: return "gmm";
    case Preset::outlier: return "outlier";
    case Preset::highdim: return "highdim";
    case Preset::pq_equal: return "pq_equal";
    case Preset::scale: return "scale";
    case Preset::custom: return "custom";
  }
  return "unknown";
}

ExperimentConfig make_preset(Preset preset, const PresetOptions& opt) {
  int d = opt.dim.value_or(preset == Preset::highdim ? 2048 : 64);
  double shift = opt.shift.value_or(preset == Preset::outlier ? 3.0 / 8.0
                                    : preset == Preset::highdim ? 1.0 / std::sqrt(2048.0)
                                                                : 0.12);
  const double psi = opt.psi.value_or(0.5);

  auto shifted_pair = [&](double s) {
    return std::pair(DistributionSpec::shifted_gaussian(d, ones(d, 0.0)),
                     DistributionSpec::shifted_gaussian(d, ones(d, s)));
  };

  std::optional<ExperimentConfig> cfg;
  switch (preset) {
    case Preset::shift:
    case Preset::highdim: {
      auto [p, q] = shifted_pair(shift);
      cfg.emplace(std::move(p), std::move(q));
      cfg->gt_mode = GtMode::mc;
      break;
    }
    case Preset::pq_equal: {
      auto [p, q] = shifted_pair(0.0);
      cfg.emplace(std::move(p), std::move(q));
      cfg->gt_mode = GtMode::ideal;
      break;
    }
    case Preset::gmm: {
      if (!opt.dim) d = 64;
      const std::vector<double> centers{0.0, -5.0, 3.0, 5.0};
      const std::vector<double> wp{0.3, 0.2, 0.5, 0.0};
      const std::vector<double> wq{0.0, 0.5, 0.2, 0.3};
      std::vector<GmmComponent> cp, cq;
      for (std::size_t l = 0; l < centers.size(); ++l) {
        cp.push_back({wp[l], ones(d, centers[l])});
        cq.push_back({wq[l], ones(d, centers[l])});
      }
      cfg.emplace(DistributionSpec::gmm(d, std::move(cp)),
                  DistributionSpec::gmm(d, std::move(cq)));
      cfg->gt_mode = GtMode::mc;
      cfg->n = 1000;
      break;
    }
    case Preset::outlier: {
      auto [p, q] = shifted_pair(shift);
      cfg.emplace(std::move(p), std::move(q));
      cfg->gt_mode = GtMode::mc;
      cfg->outlier = ones(d, 4.0);
      cfg->est.k_rule = KRule::fixed(4);
      cfg->est.split_ratio = 1.0;
      cfg->n_seeds = 1;
      break;
    }
    case Preset::scale: {
      if (!opt.dim) d = 8;
      cfg.emplace(DistributionSpec::shifted_gaussian(d, ones(d, 0.0)),
                  DistributionSpec::scaled_gaussian(d, psi));
      cfg->gt_mode = GtMode::analytic_scale;
      cfg->psi = psi;
      break;
    }
    case Preset::custom: {
      if (opt.psi) {
        cfg.emplace(DistributionSpec::shifted_gaussian(d, ones(d, 0.0)),
                    DistributionSpec::scaled_gaussian(d, psi));
        cfg->gt_mode = GtMode::analytic_scale;
        cfg->psi = psi;
        break;
      }
      auto [p, q] = shifted_pair(shift);
      cfg.emplace(std::move(p), std::move(q));
      cfg->gt_mode = shift == 0.0 ? GtMode::ideal : GtMode::mc;
      break;
    }
  }
  cfg->preset = preset;
  if (opt.n) cfg->n = *opt.n;
  if (opt.n_seeds) cfg->n_seeds = *opt.n_seeds;
  if (opt.seed) cfg->master_seed = *opt.seed;
  if (opt.k_rule) cfg->est.k_rule = *opt.k_rule;
  if (opt.split_ratio) cfg->est.split_ratio = *opt.split_ratio;
  if (opt.lambda_points) cfg->est.lambda_points = *opt.lambda_points;
  if (opt.gamma_points) cfg->est.gamma_points = *opt.gamma_points;
  if (opt.n_gt) cfg->n_gt = *opt.n_gt;
  if (opt.methods) cfg->methods = *opt.methods;
  return *cfg;
}

std::vector<std::uint64_t> derive_seeds(std::uint64_t master, int count) {
  std::vector<std::uint64_t> seeds(count);
  for (int i = 0; i < count; ++i)
    seeds[i] = master + static_cast<std::uint64_t>(i) * kSeedStride;
  return seeds;
}

Aggregate aggregate(const std::vector<PrCurve>& curves) {
  if (curves.empty()) throw std::invalid_argument("aggregate: need at least one curve");
  const auto& base = curves.front().points();
  for (const PrCurve& c : curves) {
    if (c.size() != base.size()) throw std::invalid_argument("aggregate: grid size mismatch");
    for (std::size_t i = 0; i < base.size(); ++i)
      if (c.points()[i].lambda != base[i].lambda)
        throw std::invalid_argument("aggregate: lambda grid mismatch");
  }
  const double n = static_cast<double>(curves.size());
  std::vector<CurvePoint> mean(base.size()), lo(base.size()), hi(base.size());
  std::vector<double> sigma(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double lambda = base[i].lambda;
    double s = 0.0;
    for (const PrCurve& c : curves) s += c.points()[i].alpha;
    const double m = s / n;
    double v = 0.0;
    for (const PrCurve& c : curves) {
      const double dev = c.points()[i].alpha - m;
      v += dev * dev;
    }
    const double sd = std::sqrt(v / n);  // population form
    sigma[i] = sd;
    mean[i] = {lambda, m, m / lambda};
    lo[i] = {lambda, m - sd, (m - sd) / lambda};
    hi[i] = {lambda, m + sd, (m + sd) / lambda};
  }
  return Aggregate{PrCurve(std::move(mean), CurveKind::empirical), std::move(lo),
                   std::move(hi), std::move(sigma)};
}

RunResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.n_seeds < 1) throw std::invalid_argument("run_experiment: need n_seeds >= 1");
  if (cfg.methods.empty()) throw std::invalid_argument("run_experiment: no methods");

  const LambdaGrid grid = make_lambda_grid(cfg.est.lambda_points);
  PrCurve gt = ground_truth(cfg, grid);
  const std::vector<std::uint64_t> seeds = derive_seeds(cfg.master_seed, cfg.n_seeds);

  // Same samples for every method within a seed.
  std::vector<std::vector<PrCurve>> per_method(cfg.methods.size());
  for (const std::uint64_t seed : seeds) {
    const SampleSet x = sample(cfg.p_spec, cfg.n, side_seed(seed, 0), cfg.outlier);
    const SampleSet y = sample(cfg.q_spec, cfg.n, side_seed(seed, 1));
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
      EstimatorConfig est = cfg.est;
      est.method = cfg.methods[mi];
      est.seed = seed;
      per_method[mi].push_back(estimate_curve(x, y, est));
    }
  }

  RunResult result{std::move(gt), seeds, {}};
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    Aggregate agg = aggregate(per_method[mi]);
    double iou_sum = 0.0;
    for (const PrCurve& c : per_method[mi]) iou_sum += curve_iou(c, result.gt);
    const double iou_mean = iou_sum / static_cast<double>(per_method[mi].size());
    double sigma_max = 0.0;
    for (double s : agg.sigma_alpha) sigma_max = std::max(sigma_max, s);
    SummaryReport summary = summarize(agg.mean, 8.0, &result.gt);
    result.methods.push_back(MethodResult{cfg.methods[mi], std::move(per_method[mi]),
                                          std::move(agg), summary, iou_mean, sigma_max});
  }
  return result;
}

RunResult run_experiment_to_dir(const ExperimentConfig& cfg, const fs::path& out_dir) {
  fs::create_directories(out_dir / "curves");
  fs::create_directories(out_dir / "aggregate");

  const LambdaGrid grid = make_lambda_grid(cfg.est.lambda_points);
  PrCurve gt = ground_truth(cfg, grid);
  write_curve_file(out_dir / "gt.csv", gt.points());

  const std::vector<std::uint64_t> seeds = derive_seeds(cfg.master_seed, cfg.n_seeds);
  std::vector<std::vector<PrCurve>> per_method(cfg.methods.size());
  std::vector<std::uint64_t> completed;

  auto write_failure_manifest = [&](const std::string& what) {
    json j;
    j["config"] = config_to_json(cfg);
    j["versions"] = {{"prcurve", PRCURVE_VERSION_STRING}};
    j["status"] = "aborted";
    j["error"] = what;
    j["completed_seeds"] = completed;
    write_text_file(out_dir / "manifest.json", j.dump(2) + "\n");
  };

  try {
    for (const std::uint64_t seed : seeds) {
      const SampleSet x = sample(cfg.p_spec, cfg.n, side_seed(seed, 0), cfg.outlier);
      const SampleSet y = sample(cfg.q_spec, cfg.n, side_seed(seed, 1));
      for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
        EstimatorConfig est = cfg.est;
        est.method = cfg.methods[mi];
        est.seed = seed;
        PrCurve c = estimate_curve(x, y, est);
        const fs::path file = out_dir / "curves" /
                              (std::string(method_name(cfg.methods[mi])) + "_" +
                               std::to_string(seed) + ".csv");
        write_curve_file(file, c.points());
        per_method[mi].push_back(std::move(c));
      }
      completed.push_back(seed);
    }
  } catch (const std::exception& e) {
    write_failure_manifest(e.what());
    throw;
  }

  RunResult result{std::move(gt), seeds, {}};
  json jm;
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    const char* name = method_name(cfg.methods[mi]);
    Aggregate agg = aggregate(per_method[mi]);
    write_curve_file(out_dir / "aggregate" / (std::string(name) + "_mean.csv"),
                     agg.mean.points());
    write_curve_file(out_dir / "aggregate" / (std::string(name) + "_lo.csv"), agg.lo);
    write_curve_file(out_dir / "aggregate" / (std::string(name) + "_hi.csv"), agg.hi);

    double iou_sum = 0.0;
    for (const PrCurve& c : per_method[mi]) iou_sum += curve_iou(c, result.gt);
    const double iou_mean = iou_sum / static_cast<double>(per_method[mi].size());
    double sigma_max = 0.0;
    for (double s : agg.sigma_alpha) sigma_max = std::max(sigma_max, s);
    SummaryReport summary = summarize(agg.mean, 8.0, &result.gt);

    json js = summary_to_json(summary);
    js["iou_vs_gt_mean_of_seeds"] = iou_mean;
    js["sigma_alpha_max"] = sigma_max;
    jm[name] = js;

    result.methods.push_back(MethodResult{cfg.methods[mi], std::move(per_method[mi]),
                                          std::move(agg), summary, iou_mean, sigma_max});
  }

  json j;
  j["config"] = config_to_json(cfg);
  j["versions"] = {{"prcurve", PRCURVE_VERSION_STRING}};
  j["status"] = "complete";
  j["seeds"] = seeds;
  j["gt"] = "gt.csv";
  j["methods"] = jm;
  write_text_file(out_dir / "manifest.json", j.dump(2) + "\n");
  return result;
}

}  // namespace prcurve

#include "prcurve/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "prcurve/grid.hpp"
#include "prcurve/parallel.hpp"

namespace prcurve {

int KRule::resolve(std::size_t n_train) const {
  int out;
  if (kind == Kind::fixed) {
    out = k;
  } else {
    out = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n_train))));
  }
  out = std::max(1, out);
  if (static_cast<std::size_t>(out) > n_train - 1) out = static_cast<int>(n_train) - 1;
  return out;
}

RatePair empirical_rates(const ClassifierFamily& family, double gamma,
                         const SampleSet& val_x, const SampleSet& val_y) {
  if (val_x.n < 1 || val_y.n < 1)
    throw std::invalid_argument("empirical_rates: empty validation set");
  if (val_x.d != family.dim() || val_y.d != family.dim())
    throw std::invalid_argument("empirical_rates: dimension mismatch");
  std::vector<double> scratch;
  long miss_x = 0, hit_y = 0;
  for (std::size_t i = 0; i < val_x.n; ++i)
    miss_x += !predict(family.scores(val_x.row(i), SelfRef{}, scratch), gamma);
  for (std::size_t i = 0; i < val_y.n; ++i)
    hit_y += predict(family.scores(val_y.row(i), SelfRef{}, scratch), gamma);
  return {static_cast<double>(miss_x) / val_x.n, static_cast<double>(hit_y) / val_y.n};
}

RatePair empirical_rates_of(const std::function<bool(const double*)>& f,
                            const SampleSet& val_x, const SampleSet& val_y) {
  if (val_x.n < 1 || val_y.n < 1)
    throw std::invalid_argument("empirical_rates_of: empty validation set");
  long miss_x = 0, hit_y = 0;
  for (std::size_t i = 0; i < val_x.n; ++i) miss_x += !f(val_x.row(i));
  for (std::size_t i = 0; i < val_y.n; ++i) hit_y += f(val_y.row(i));
  return {static_cast<double>(miss_x) / val_x.n, static_cast<double>(hit_y) / val_y.n};
}

PrCurve estimate_curve(const SampleSet& x, const SampleSet& y, const EstimatorConfig& cfg) {
  validate(x);
  validate(y);
  if (x.n < 4 || y.n < 4) throw std::invalid_argument("estimate_curve: need >= 4 points per side");
  if (x.d != y.d) throw std::invalid_argument("estimate_curve: dimension mismatch");

  const SplitPool pool = make_split(x, y, cfg.split_ratio, cfg.seed);
  const std::size_t n_fit = std::min(pool.train_x.n, pool.train_y.n);
  const int k = cfg.k_rule.resolve(n_fit);
  const ClassifierFamily family =
      make_family(cfg.method, pool.train_x, pool.train_y, k, cfg.parzen_k);

  // Scores are gamma-independent; compute them once per validation point.
  const bool aliased = !pool.split_applied;
  std::vector<PointScores> sx(pool.val_x.n), sy(pool.val_y.n);
  parallel_for(pool.val_x.n, [&](std::size_t lo, std::size_t hi) {
    std::vector<double> scratch;
    for (std::size_t i = lo; i < hi; ++i) {
      SelfRef self;
      if (aliased) self.in_x = static_cast<std::ptrdiff_t>(i);
      sx[i] = family.scores(pool.val_x.row(i), self, scratch);
    }
  });
  parallel_for(pool.val_y.n, [&](std::size_t lo, std::size_t hi) {
    std::vector<double> scratch;
    for (std::size_t i = lo; i < hi; ++i) {
      SelfRef self;
      if (aliased) self.in_y = static_cast<std::ptrdiff_t>(i);
      sy[i] = family.scores(pool.val_y.row(i), self, scratch);
    }
  });

  const std::vector<double> gammas = make_gamma_values(cfg.gamma_points);
  std::vector<double> fpr(gammas.size()), fnr(gammas.size());
  parallel_for(gammas.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t g = lo; g < hi; ++g) {
      long miss_x = 0, hit_y = 0;
      for (const PointScores& s : sx) miss_x += !predict(s, gammas[g]);
      for (const PointScores& s : sy) hit_y += predict(s, gammas[g]);
      fpr[g] = static_cast<double>(miss_x) / sx.size();
      fnr[g] = static_cast<double>(hit_y) / sy.size();
    }
  });

  const LambdaGrid grid = make_lambda_grid(cfg.lambda_points);
  std::vector<CurvePoint> pts;
  pts.reserve(grid.size());
  for (double lambda : grid.lambdas) {
    double alpha = std::min(1.0, lambda);  // trivial classifiers f==1 / f==0
    for (std::size_t g = 0; g < gammas.size(); ++g)
      alpha = std::min(alpha, lambda * fpr[g] + fnr[g]);
    pts.push_back({lambda, alpha, alpha / lambda});
  }

  // Concavity of the min of affine maps guarantees monotonicity; a violation
  // here means a bug upstream, so fail loudly instead of repairing.
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].alpha < pts[i - 1].alpha || pts[i].beta > pts[i - 1].beta)
      throw std::logic_error("estimate_curve: monotonicity violated");
  }
  return PrCurve(std::move(pts), CurveKind::empirical);
}

double extreme_scalar(ExtremeKind kind, const SampleSet& x, const SampleSet& y,
                      const ExtremeParams& params) {
  validate(x);
  validate(y);
  if (x.d != y.d) throw std::invalid_argument("extreme_scalar: dimension mismatch");
  const int k = params.k;
  if (k < 1 || static_cast<std::size_t>(k) > std::min(x.n, y.n) - 1)
    throw std::invalid_argument("extreme_scalar: k out of range");

  switch (kind) {
    case ExtremeKind::ipr: {
      const NeighborIndex ix(x, k);
      long hits = 0;
      for (std::size_t j = 0; j < y.n; ++j)
        hits += count_balls_containing(x, ix.radii_sq(), y.row(j)) > 0;
      return static_cast<double>(hits) / y.n;
    }
    case ExtremeKind::coverage:
    case ExtremeKind::prc: {
      const int need = kind == ExtremeKind::prc ? params.k_prime : 1;
      if (need < 1) throw std::invalid_argument("extreme_scalar: need k_prime >= 1");
      const NeighborIndex iy(y, k);
      long hits = 0;
      for (std::size_t j = 0; j < y.n; ++j)
        hits += count_within_sq(x, y.row(j), iy.radii_sq()[j]) >= need;
      return static_cast<double>(hits) / y.n;
    }
    case ExtremeKind::eas: {
      return std::min(extreme_scalar(ExtremeKind::ipr, x, y, params),
                      extreme_scalar(ExtremeKind::coverage, x, y, params));
    }
    case ExtremeKind::ppr: {
      const NeighborIndex ix(x, k);
      double r = 0.0;
      for (double v : ix.radii()) r += v;
      r /= static_cast<double>(x.n);
      auto tent = [r](double dist) {
        if (r <= 0.0) return dist == 0.0 ? 1.0 : 0.0;
        return std::max(0.0, 1.0 - dist / r);
      };
      double total = 0.0;
      for (std::size_t j = 0; j < y.n; ++j) {
        double prod = 1.0;
        for (std::size_t i = 0; i < x.n; ++i) {
          const double t = tent(std::sqrt(sq_dist(y.row(j), x.row(i), x.d)));
          prod *= params.ppr_form == PprForm::as_written ? t : 1.0 - t;
        }
        total += 1.0 - prod;
      }
      return total / static_cast<double>(y.n);
    }
  }
  throw std::logic_error("extreme_scalar: unknown kind");
}

}  // namespace prcurve

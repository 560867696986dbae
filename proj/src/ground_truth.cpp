#include "prcurve/ground_truth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "prcurve/parallel.hpp"
#include "prcurve/sampling.hpp"

namespace prcurve {

PrCurve gt_curve_mc(const DistributionSpec& p_spec, const DistributionSpec& q_spec,
                    std::size_t n_gt, const LambdaGrid& grid, std::uint64_t seed) {
  if (p_spec.dim() != q_spec.dim())
    throw std::invalid_argument("gt_curve_mc: dimension mismatch");
  if (n_gt < 1000) throw std::invalid_argument("gt_curve_mc: need n_gt >= 1000");

  const SampleSet x = sample(p_spec, n_gt, side_seed(seed, 0));
  const SampleSet y = sample(q_spec, n_gt, side_seed(seed, 1));
  const std::size_t d = x.d;

  std::vector<double> lx(n_gt), ly(n_gt);
  parallel_for(n_gt, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      lx[i] = log_density_ratio(p_spec, q_spec, {x.row(i), d});
      ly[i] = log_density_ratio(p_spec, q_spec, {y.row(i), d});
    }
  });
  std::sort(lx.begin(), lx.end());
  std::sort(ly.begin(), ly.end());

  const double n = static_cast<double>(n_gt);
  const std::size_t m = grid.size();
  std::vector<double> fpr(m), fnr(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double cut = -std::log(grid.lambdas[i]);
    // f = 1 iff log ratio >= cut
    const auto below_x = std::lower_bound(lx.begin(), lx.end(), cut) - lx.begin();
    const auto below_y = std::lower_bound(ly.begin(), ly.end(), cut) - ly.begin();
    fpr[i] = static_cast<double>(below_x) / n;
    fnr[i] = static_cast<double>(n_gt - below_y) / n;
  }

  // Lower envelope over the evaluated classifiers, with the trivial
  // classifiers capping it at min(lambda, 1).
  std::vector<CurvePoint> pts;
  pts.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double lambda = grid.lambdas[i];
    double alpha = std::min(1.0, lambda);
    for (std::size_t j = 0; j < m; ++j)
      alpha = std::min(alpha, lambda * fpr[j] + fnr[j]);
    pts.push_back({lambda, alpha, alpha / lambda});
  }
  return PrCurve(std::move(pts), CurveKind::mc_ground_truth);
}

}  // namespace prcurve

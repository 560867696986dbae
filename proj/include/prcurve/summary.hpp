// Scalar distillations of a curve: F_b scores, the PR median point, curve
// IoU against a reference, and the extreme values.
#pragma once

#include <optional>

#include "prcurve/curve.hpp"

namespace prcurve {

struct PrMedianPoint {
  double lambda;
  double alpha;
  double beta;
};

// max over curve points of (1 + b^2) / (b^2/alpha + 1/beta); points with
// alpha or beta at 0 contribute 0. Grid points only, no interpolation: the
// curve is concave, so the grid max understates by at most the grid modulus.
double f_score(const PrCurve& curve, double b);

// The point whose ray alpha = lambda * beta halves the under-curve area.
// Bisection to 1e-8 relative on lambda; the returned point interpolates the
// frontier linearly in (beta, alpha). Requires positive curve area.
PrMedianPoint pr_median(const PrCurve& curve);

// Jaccard index of the under-curve regions on a shared dense beta grid
// (10^4 midpoints). Symmetric, in [0, 1]; two empty regions give 1.
double curve_iou(const PrCurve& a, const PrCurve& b);

// (alpha at the largest grid lambda, beta at the smallest grid lambda).
std::pair<double, double> extremes(const PrCurve& curve);

struct SummaryReport {
  double b = 8.0;
  double f_b = 0.0;
  double f_inv_b = 0.0;
  PrMedianPoint median{};
  double alpha_inf_hat = 0.0;
  double beta_0_hat = 0.0;
  std::optional<double> iou_vs_reference;
};

SummaryReport summarize(const PrCurve& curve, double b = 8.0,
                        const PrCurve* reference = nullptr);

}  // namespace prcurve

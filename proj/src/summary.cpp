#include "prcurve/summary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prcurve {
namespace {

constexpr int kIouGridPoints = 10000;

PrMedianPoint point_at_ray(const PrCurve& curve, double ray) {
  const auto& pts = curve.points();
  if (ray <= pts.front().lambda) {
    const auto& p = pts.front();
    return {ray, p.alpha, p.beta};
  }
  if (ray >= pts.back().lambda) {
    const auto& p = pts.back();
    return {ray, p.alpha, p.beta};
  }
  // Intersect the ray alpha = ray * beta with the frontier segment whose
  // lambda interval brackets it.
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i].lambda <= ray && ray <= pts[i + 1].lambda)) continue;
    const double b0 = pts[i].beta, a0 = pts[i].alpha;
    const double db = pts[i + 1].beta - b0, da = pts[i + 1].alpha - a0;
    const double denom = da - ray * db;
    double t = 0.0;
    if (std::fabs(denom) > 1e-300) t = (ray * b0 - a0) / denom;
    t = std::clamp(t, 0.0, 1.0);
    return {ray, a0 + t * da, b0 + t * db};
  }
  const auto& p = pts.back();
  return {ray, p.alpha, p.beta};
}

}  // namespace

double f_score(const PrCurve& curve, double b) {
  if (curve.size() == 0) throw std::invalid_argument("f_score: empty curve");
  if (!(b > 0.0)) throw std::invalid_argument("f_score: need b > 0");
  const double b2 = b * b;
  double best = 0.0;
  for (const CurvePoint& p : curve.clamped_unit().points()) {
    if (p.alpha <= 0.0 || p.beta <= 0.0) continue;
    best = std::max(best, (1.0 + b2) / (b2 / p.alpha + 1.0 / p.beta));
  }
  return best;
}

PrMedianPoint pr_median(const PrCurve& curve) {
  const PrCurve clamped = curve.clamped_unit();
  const CurveEnvelope env(clamped);
  const double total = env.area();
  if (!(total > 0.0)) throw std::invalid_argument("pr_median: zero-area curve");
  const double half = 0.5 * total;

  double lo = 0.0, hi = 1.0;
  while (env.area_above_ray(hi) > half) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) break;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (env.area_above_ray(mid) > half)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-8 * std::max(1.0, lo)) break;
  }
  return point_at_ray(clamped, 0.5 * (lo + hi));
}

double curve_iou(const PrCurve& a, const PrCurve& b) {
  if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("curve_iou: empty curve");
  const CurveEnvelope ea(a.clamped_unit());
  const CurveEnvelope eb(b.clamped_unit());
  double inter = 0.0, uni = 0.0;
  for (int i = 0; i < kIouGridPoints; ++i) {
    const double x = (i + 0.5) / kIouGridPoints;
    const double fa = ea.value(x);
    const double fb = eb.value(x);
    inter += std::min(fa, fb);
    uni += std::max(fa, fb);
  }
  if (uni == 0.0) return 1.0;  // both regions empty
  return inter / uni;
}

std::pair<double, double> extremes(const PrCurve& curve) {
  if (curve.size() == 0) throw std::invalid_argument("extremes: empty curve");
  return {curve.points().back().alpha, curve.points().front().beta};
}

SummaryReport summarize(const PrCurve& curve, double b, const PrCurve* reference) {
  SummaryReport r;
  r.b = b;
  r.f_b = f_score(curve, b);
  r.f_inv_b = f_score(curve, 1.0 / b);
  r.median = pr_median(curve);
  const auto ext = extremes(curve);
  r.alpha_inf_hat = ext.first;
  r.beta_0_hat = ext.second;
  if (reference) r.iou_vs_reference = curve_iou(curve, *reference);
  return r;
}

}  // namespace prcurve

#include "prcurve/gaussian_scale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "prcurve/special.hpp"

namespace prcurve {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogTwo = 0.69314718055994530941723212145818;
const double kSqrtTwoPi = std::sqrt(2.0 * 3.14159265358979323846264338327950288);

void check_args(double psi, int d) {
  if (!(psi > 0.0) || !std::isfinite(psi))
    throw std::invalid_argument("need psi > 0 and finite");
  if (d < 1) throw std::invalid_argument("need d >= 1");
}

}  // namespace

DecisionRegion scale_threshold(double psi, double lambda, int d) {
  check_args(psi, d);
  if (psi == 1.0) throw std::invalid_argument("scale_threshold: psi == 1 is degenerate");
  if (!(lambda > 0.0)) throw std::invalid_argument("scale_threshold: need lambda > 0");

  // r_psi(x) >= 1/lambda  <=>  ||x||^2 (1 - 1/psi^2) <= 2 log(lambda psi^d)
  const double s = std::log(lambda) + d * std::log(psi);
  if (psi < 1.0) {
    if (s > 0.0) return {kInf, RegionOrientation::accept_all};  // lambda > psi^-d
    const double t_sq = 2.0 * psi * psi * (-s) / (1.0 - psi * psi);
    return {std::sqrt(t_sq), RegionOrientation::accept_outside};
  }
  if (s < 0.0) return {kInf, RegionOrientation::accept_none};  // lambda < psi^-d
  const double t_sq = 2.0 * psi * psi * s / (psi * psi - 1.0);
  return {std::sqrt(t_sq), RegionOrientation::accept_inside};
}

double chi_tail(int d, double t) {
  if (d < 1) throw std::invalid_argument("chi_tail: need d >= 1");
  if (!(t >= 0.0)) throw std::invalid_argument("chi_tail: need t >= 0");
  return gamma_q(0.5 * d, 0.5 * t * t);
}

double chi_tail_recurrence(int d, double t) {
  if (d < 1) throw std::invalid_argument("chi_tail_recurrence: need d >= 1");
  if (!(t >= 0.0)) throw std::invalid_argument("chi_tail_recurrence: need t >= 0");

  // chi_tail(d, t) = c_d * J_(d-1)(t) with c_d = 2^(1 - d/2) / Gamma(d/2).
  // The recurrence is linear, so it can be run on c_d * J_m directly; every
  // intermediate then stays within [0, 1]-ish magnitudes.
  const double log_c = (1.0 - 0.5 * d) * kLogTwo - std::lgamma(0.5 * d);
  const double c = std::exp(log_c);

  const int m_base = (d % 2 == 1) ? 0 : 1;  // parity of the J chain
  double j = (m_base == 0) ? c * kSqrtTwoPi * (1.0 - norm_cdf(t))
                           : c * std::exp(-0.5 * t * t);
  if (d - 1 == m_base) return j;

  // First additive term c * t^(m-1) e^(-t^2/2) at m = m_base + 2; later
  // terms follow by multiplying with t^2.
  const int m_first = m_base + 2;
  double term = (t == 0.0)
                    ? 0.0
                    : std::exp((m_first - 1) * std::log(t) - 0.5 * t * t + log_c);
  for (int m = m_first; m <= d - 1; m += 2) {
    j = term + (m - 1) * j;
    term *= t * t;
  }
  return j;
}

double analytic_alpha_scale(double psi, double lambda, int d) {
  check_args(psi, d);
  if (!(lambda > 0.0)) throw std::invalid_argument("analytic_alpha_scale: need lambda > 0");
  if (psi == 1.0) return std::min(lambda, 1.0);

  const DecisionRegion region = scale_threshold(psi, lambda, d);
  double alpha;
  switch (region.orientation) {
    case RegionOrientation::accept_all:
      alpha = 1.0;  // f == 1: fpr = 0, fnr = 1
      break;
    case RegionOrientation::accept_none:
      alpha = lambda;  // f == 0: fpr = 1, fnr = 0
      break;
    case RegionOrientation::accept_outside: {
      const double t = region.threshold;
      alpha = lambda * (1.0 - chi_tail(d, t)) + chi_tail(d, t / psi);
      break;
    }
    case RegionOrientation::accept_inside: {
      const double t = region.threshold;
      alpha = lambda * chi_tail(d, t) + (1.0 - chi_tail(d, t / psi));
      break;
    }
    default:
      throw std::logic_error("analytic_alpha_scale: unknown orientation");
  }
  return std::clamp(alpha, 0.0, std::min(lambda, 1.0));
}

PrCurve analytic_curve_scale(double psi, int d, const LambdaGrid& grid) {
  std::vector<CurvePoint> pts;
  pts.reserve(grid.size());
  for (double lambda : grid.lambdas) {
    const double alpha = analytic_alpha_scale(psi, lambda, d);
    pts.push_back({lambda, alpha, alpha / lambda});
  }
  return PrCurve(std::move(pts), CurveKind::analytic);
}

}  // namespace prcurve

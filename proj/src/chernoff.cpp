#include "prcurve/chernoff.hpp"

#include <cmath>
#include <stdexcept>

namespace prcurve {
namespace {

void check_psi(double psi) {
  if (!(psi > 0.0) || !std::isfinite(psi))
    throw std::invalid_argument("need psi > 0 and finite");
}

double log_m(double psi, double gamma) {
  // 1 + gamma (psi^2 - 1) >= psi^2 > 0 on gamma in [0, 1]
  return gamma * std::log(psi) - 0.5 * std::log1p(gamma * (psi * psi - 1.0));
}

}  // namespace

double chernoff_m(double psi, double gamma) {
  check_psi(psi);
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("chernoff_m: need gamma in [0, 1]");
  return std::exp(log_m(psi, gamma));
}

ChernoffResult chernoff_coefficient(double psi) {
  check_psi(psi);
  if (psi == 1.0) return {1.0, 0.5, 0.0};

  // log m is convex in gamma with log m(0) = log m(1) = 0.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = 1.0;
  double a = hi - gr * (hi - lo);
  double b = lo + gr * (hi - lo);
  double fa = log_m(psi, a);
  double fb = log_m(psi, b);
  while (hi - lo > 1e-10) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - gr * (hi - lo);
      fa = log_m(psi, a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + gr * (hi - lo);
      fb = log_m(psi, b);
    }
  }
  const double gamma = 0.5 * (lo + hi);
  const double lm = log_m(psi, gamma);
  return {std::exp(lm), gamma, -lm};
}

double chernoff_bound(double psi, double lambda, int d, double gamma) {
  check_psi(psi);
  if (!(lambda > 0.0)) throw std::invalid_argument("chernoff_bound: need lambda > 0");
  if (d < 1) throw std::invalid_argument("chernoff_bound: need d >= 1");
  if (!(gamma > 0.0) || !(gamma < 1.0))
    throw std::invalid_argument("chernoff_bound: need gamma in (0, 1)");
  return std::exp(gamma * std::log(lambda) + d * log_m(psi, gamma));
}

}  // namespace prcurve

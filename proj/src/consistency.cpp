#include "prcurve/consistency.hpp"

#include <cmath>
#include <stdexcept>

#include "prcurve/parallel.hpp"
#include "prcurve/sampling.hpp"
#include "prcurve/special.hpp"

namespace prcurve {
namespace {

void check_mu_args(double p, int k, double lambda) {
  if (!(p >= 0.0) || !(p <= 1.0)) throw std::invalid_argument("mu_lambda: need p in [0, 1]");
  if (k < 1) throw std::invalid_argument("mu_lambda: need k >= 1");
  if (!(lambda > 0.0)) throw std::invalid_argument("mu_lambda: need lambda > 0");
}

template <typename Cdf>
double mu_with(double p, int k, double lambda, Cdf cdf) {
  const double t = static_cast<double>(k) / (lambda + 1.0);
  // P{B < t} = cdf(ceil(t) - 1): drops the atom when t is an integer.
  // P{B > t} = 1 - cdf(floor(t)).
  const long m_lt = static_cast<long>(std::ceil(t)) - 1;
  const long m_le = static_cast<long>(std::floor(t));
  const double p_lt = cdf(m_lt, k, p);
  const double p_gt = 1.0 - cdf(m_le, k, p);
  return lambda * p * p_lt + (1.0 - p) * p_gt;
}

}  // namespace

double mu_lambda(double p, int k, double lambda) {
  check_mu_args(p, k, lambda);
  return mu_with(p, k, lambda, binom_cdf);
}

double mu_lambda_direct(double p, int k, double lambda) {
  check_mu_args(p, k, lambda);
  return mu_with(p, k, lambda, binom_cdf_direct);
}

double mu_lambda_limit(double p, double lambda) {
  return std::min(lambda * p, 1.0 - p);
}

double mu_lambda_bound(double p, int k, double lambda) {
  const double delta = 1.0 / (lambda + 1.0) - p;
  return (lambda + 1.0) * std::exp(-2.0 * k * delta * delta);
}

double asymptotic_knn_risk(const DistributionSpec& p_spec, const DistributionSpec& q_spec,
                           int k, double lambda, std::size_t n_mc, std::uint64_t seed) {
  if (p_spec.dim() != q_spec.dim())
    throw std::invalid_argument("asymptotic_knn_risk: dimension mismatch");
  if (n_mc < 1000) throw std::invalid_argument("asymptotic_knn_risk: need n_mc >= 1000");

  // Z ~ (P+Q)/2 sampled stratified: half from each side.
  const std::size_t np = n_mc / 2;
  const std::size_t nq = n_mc - np;
  const SampleSet zx = sample(p_spec, np, side_seed(seed, 0));
  const SampleSet zy = sample(q_spec, nq, side_seed(seed, 1));

  auto mean_mu = [&](const SampleSet& z) {
    std::vector<double> vals(z.n);
    parallel_for(z.n, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        const double lr = log_density_ratio(p_spec, q_spec, {z.row(i), z.d});
        // eta = dP/d(P+Q) = logistic(log ratio); stable at both tails.
        const double eta = 1.0 / (1.0 + std::exp(-lr));
        vals[i] = mu_lambda(eta, k, lambda);
      }
    });
    double s = 0.0;
    for (double v : vals) s += v;
    return s / static_cast<double>(z.n);
  };
  return mean_mu(zx) + mean_mu(zy);
}

}  // namespace prcurve

#include "prcurve/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace prcurve {
namespace {

constexpr double kLogTwoPi = 1.8378770664093454835606594728112;

double sq_norm(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) s += v * v;
  return s;
}

double sq_dist(std::span<const double> z, const std::vector<double>& c) {
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double t = z[i] - c[i];
    s += t * t;
  }
  return s;
}

}  // namespace

DistributionSpec DistributionSpec::shifted_gaussian(std::size_t d, std::vector<double> mu) {
  if (d < 1) throw std::invalid_argument("DistributionSpec: need d >= 1");
  if (mu.size() != d) throw std::invalid_argument("DistributionSpec: mu must have d entries");
  for (double v : mu)
    if (!std::isfinite(v)) throw std::invalid_argument("DistributionSpec: non-finite mu");
  DistributionSpec s;
  s.variant_ = Variant::shifted_gaussian;
  s.d_ = d;
  s.mu_ = std::move(mu);
  return s;
}

DistributionSpec DistributionSpec::scaled_gaussian(std::size_t d, double psi) {
  if (d < 1) throw std::invalid_argument("DistributionSpec: need d >= 1");
  if (!(psi > 0.0) || !std::isfinite(psi))
    throw std::invalid_argument("DistributionSpec: need psi > 0");
  DistributionSpec s;
  s.variant_ = Variant::scaled_gaussian;
  s.d_ = d;
  s.psi_ = psi;
  return s;
}

DistributionSpec DistributionSpec::gmm(std::size_t d, std::vector<GmmComponent> components) {
  if (d < 1) throw std::invalid_argument("DistributionSpec: need d >= 1");
  if (components.empty()) throw std::invalid_argument("DistributionSpec: empty mixture");
  double total = 0.0;
  bool any_positive = false;
  for (const GmmComponent& c : components) {
    if (!(c.weight >= 0.0)) throw std::invalid_argument("DistributionSpec: negative weight");
    if (c.center.size() != d)
      throw std::invalid_argument("DistributionSpec: component center must have d entries");
    for (double v : c.center)
      if (!std::isfinite(v)) throw std::invalid_argument("DistributionSpec: non-finite center");
    total += c.weight;
    any_positive = any_positive || c.weight > 0.0;
  }
  if (std::fabs(total - 1.0) > 1e-12)
    throw std::invalid_argument("DistributionSpec: weights must sum to 1");
  if (!any_positive) throw std::invalid_argument("DistributionSpec: all weights zero");
  DistributionSpec s;
  s.variant_ = Variant::gmm;
  s.d_ = d;
  s.components_ = std::move(components);
  return s;
}

double DistributionSpec::log_density(std::span<const double> z) const {
  if (z.size() != d_) throw std::invalid_argument("log_density: dimension mismatch");
  const double dd = static_cast<double>(d_);
  switch (variant_) {
    case Variant::shifted_gaussian:
      return -0.5 * sq_dist(z, mu_) - 0.5 * dd * kLogTwoPi;
    case Variant::scaled_gaussian:
      return -0.5 * sq_norm(z) / (psi_ * psi_) - 0.5 * dd * kLogTwoPi - dd * std::log(psi_);
    case Variant::gmm: {
      // log-sum-exp over the positive-weight components
      double best = -std::numeric_limits<double>::infinity();
      std::vector<double> terms;
      terms.reserve(components_.size());
      for (const GmmComponent& c : components_) {
        if (c.weight <= 0.0) continue;
        const double t = std::log(c.weight) - 0.5 * sq_dist(z, c.center);
        terms.push_back(t);
        best = std::max(best, t);
      }
      double acc = 0.0;
      for (double t : terms) acc += std::exp(t - best);
      return best + std::log(acc) - 0.5 * dd * kLogTwoPi;
    }
  }
  throw std::logic_error("log_density: unknown variant");
}

std::string DistributionSpec::id() const {
  switch (variant_) {
    case Variant::shifted_gaussian:
      return "shifted_gaussian(d=" + std::to_string(d_) + ")";
    case Variant::scaled_gaussian:
      return "scaled_gaussian(d=" + std::to_string(d_) + ",psi=" + std::to_string(psi_) + ")";
    case Variant::gmm:
      return "gmm(d=" + std::to_string(d_) + ",k=" + std::to_string(components_.size()) + ")";
  }
  return "unknown";
}

double log_density_ratio(const DistributionSpec& p, const DistributionSpec& q,
                         std::span<const double> z) {
  if (p.dim() != q.dim()) throw std::invalid_argument("log_density_ratio: dimension mismatch");
  if (z.size() != p.dim()) throw std::invalid_argument("log_density_ratio: bad point dimension");
  return p.log_density(z) - q.log_density(z);
}

}  // namespace prcurve

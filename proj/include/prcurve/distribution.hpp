// Analytic distribution descriptions: isotropic Gaussians with a mean shift,
// the scaled Gaussian N(0, psi^2 I), and identity-covariance mixtures.
// These support exact log densities and seeded sampling.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace prcurve {

struct GmmComponent {
  double weight;
  std::vector<double> center;
};

class DistributionSpec {
 public:
  enum class Variant { shifted_gaussian, scaled_gaussian, gmm };

  static DistributionSpec shifted_gaussian(std::size_t d, std::vector<double> mu);
  static DistributionSpec scaled_gaussian(std::size_t d, double psi);
  static DistributionSpec gmm(std::size_t d, std::vector<GmmComponent> components);

  Variant variant() const { return variant_; }
  std::size_t dim() const { return d_; }
  double psi() const { return psi_; }
  const std::vector<double>& mu() const { return mu_; }
  const std::vector<GmmComponent>& components() const { return components_; }

  double log_density(std::span<const double> z) const;

  // Short identifier used as sample provenance, e.g. "shifted_gaussian(d=64)".
  std::string id() const;

 private:
  DistributionSpec() = default;

  Variant variant_ = Variant::shifted_gaussian;
  std::size_t d_ = 0;
  double psi_ = 1.0;
  std::vector<double> mu_;
  std::vector<GmmComponent> components_;
};

// log(dP/dQ)(z); finite for every z since all variants have full support.
// Throws std::invalid_argument on dimension mismatch.
double log_density_ratio(const DistributionSpec& p, const DistributionSpec& q,
                         std::span<const double> z);

}  // namespace prcurve

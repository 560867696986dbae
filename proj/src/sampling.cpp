#include "prcurve/sampling.hpp"

#include <stdexcept>

#include "prcurve/rng.hpp"

namespace prcurve {
namespace {

constexpr std::uint64_t kRowStreamBase = 0x726f7773ull;  // "rows"

void fill_row(const DistributionSpec& spec, std::uint64_t seed, std::size_t row,
              double* out) {
  Rng rng(seed, kRowStreamBase + row);
  const std::size_t d = spec.dim();
  switch (spec.variant()) {
    case DistributionSpec::Variant::shifted_gaussian: {
      const auto& mu = spec.mu();
      for (std::size_t j = 0; j < d; ++j) out[j] = mu[j] + rng.normal();
      return;
    }
    case DistributionSpec::Variant::scaled_gaussian: {
      const double psi = spec.psi();
      for (std::size_t j = 0; j < d; ++j) out[j] = psi * rng.normal();
      return;
    }
    case DistributionSpec::Variant::gmm: {
      const double u = rng.uniform();
      double cum = 0.0;
      const auto& comps = spec.components();
      const GmmComponent* pick = &comps.back();
      for (const GmmComponent& c : comps) {
        cum += c.weight;
        if (u < cum) {
          pick = &c;
          break;
        }
      }
      for (std::size_t j = 0; j < d; ++j) out[j] = pick->center[j] + rng.normal();
      return;
    }
  }
  throw std::logic_error("sample: unknown variant");
}

}  // namespace

SampleSet sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed,
                 const std::optional<std::vector<double>>& outlier) {
  if (n < 1) throw std::invalid_argument("sample: need n >= 1");
  SampleSet out;
  out.n = n;
  out.d = spec.dim();
  out.seed = seed;
  out.spec_id = spec.id();
  out.data.resize(n * out.d);
  for (std::size_t i = 0; i < n; ++i) fill_row(spec, seed, i, out.row(i));
  if (outlier) {
    if (outlier->size() != out.d)
      throw std::invalid_argument("sample: outlier dimension mismatch");
    std::copy(outlier->begin(), outlier->end(), out.row(n - 1));
  }
  validate(out);
  return out;
}

std::uint64_t side_seed(std::uint64_t seed, int side) {
  return seed + static_cast<std::uint64_t>(side) * 0x517CC1B727220A95ull;
}

}  // namespace prcurve

// Seeded i.i.d. sampling from a DistributionSpec. Each row has its own
// counter-based stream, so draws do not depend on evaluation order.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prcurve/distribution.hpp"
#include "prcurve/sample_set.hpp"

namespace prcurve {

// n i.i.d. draws; if an outlier is given the last row is replaced by it,
// keeping the set size unchanged.
SampleSet sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed,
                 const std::optional<std::vector<double>>& outlier = std::nullopt);

// Fixed derivations used whenever one seed must drive several sample sets.
std::uint64_t side_seed(std::uint64_t seed, int side);

}  // namespace prcurve

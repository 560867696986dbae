// Monte-Carlo ground-truth curve through the Bayes (likelihood-ratio)
// classifier f*_lambda(z) = 1{log dP/dQ (z) >= -log lambda}.
#pragma once

#include <cstdint>

#include "prcurve/curve.hpp"
#include "prcurve/distribution.hpp"
#include "prcurve/grid.hpp"

namespace prcurve {

// Samples n_gt points from each spec and evaluates lambda * fpr + fnr of the
// Bayes classifier on the grid. The returned curve is the lower envelope of
// the evaluated (fpr, fnr) pairs, which keeps it monotone where the raw
// plug-in values can wiggle by O(1/n_gt). Deterministic given the seed.
// Requires n_gt >= 1000.
PrCurve gt_curve_mc(const DistributionSpec& p_spec, const DistributionSpec& q_spec,
                    std::size_t n_gt, const LambdaGrid& grid, std::uint64_t seed);

}  // namespace prcurve

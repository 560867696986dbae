// Exact nearest-neighbor machinery. Searches are brute force over squared
// Euclidean distances: exact by construction, deterministic under the
// ascending-index tie rule, and fast enough at the sample sizes used here
// (high ambient dimension defeats spatial trees anyway).
#pragma once

#include <vector>

#include "prcurve/sample_set.hpp"

namespace prcurve {

double sq_dist(const double* a, const double* b, std::size_t d);

// Per-point distance to the k-th nearest other point within the set.
class NeighborIndex {
 public:
  // Throws std::invalid_argument unless 1 <= k <= n - 1.
  NeighborIndex(const SampleSet& points, int k);

  int k() const { return k_; }
  std::size_t size() const { return radii_.size(); }
  double radius(std::size_t i) const { return radii_[i]; }
  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& radii_sq() const { return radii_sq_; }

 private:
  int k_;
  std::vector<double> radii_;
  std::vector<double> radii_sq_;
};

NeighborIndex build_neighbor_index(const SampleSet& points, int k);

// Squared distance from z to its k-th nearest point of ref, optionally
// excluding one index (the query itself when it belongs to ref).
// scratch must have room for ref.n entries.
double kth_distance_sq(const SampleSet& ref, const double* z, int k,
                       std::ptrdiff_t exclude, std::vector<double>& scratch);

// #{i : ||z - ref_i||^2 <= radii_sq[i]} -- membership in per-point balls.
int count_balls_containing(const SampleSet& ref, const std::vector<double>& radii_sq,
                           const double* z);

// #{i : ||z - ref_i||^2 <= r_sq} -- membership in a fixed ball around z.
int count_within_sq(const SampleSet& ref, const double* z, double r_sq);

}  // namespace prcurve

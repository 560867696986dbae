#include "prcurve/neighbor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "prcurve/parallel.hpp"

namespace prcurve {

double sq_dist(const double* a, const double* b, std::size_t d) {
  double s = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double t = a[j] - b[j];
    s += t * t;
  }
  return s;
}

NeighborIndex::NeighborIndex(const SampleSet& points, int k) : k_(k) {
  const std::size_t n = points.n;
  if (n < 2) throw std::invalid_argument("NeighborIndex: need at least 2 points");
  if (k < 1 || static_cast<std::size_t>(k) > n - 1)
    throw std::invalid_argument("NeighborIndex: need 1 <= k <= n - 1");

  radii_sq_.resize(n);
  radii_.resize(n);
  parallel_for(n, [&](std::size_t lo, std::size_t hi) {
    std::vector<double> dist(n);
    for (std::size_t i = lo; i < hi; ++i) {
      const double* zi = points.row(i);
      for (std::size_t j = 0; j < n; ++j) dist[j] = sq_dist(zi, points.row(j), points.d);
      dist[i] = std::numeric_limits<double>::infinity();  // exclude the point itself
      std::nth_element(dist.begin(), dist.begin() + (k - 1), dist.end());
      radii_sq_[i] = dist[k - 1];
      radii_[i] = std::sqrt(dist[k - 1]);
    }
  });
}

NeighborIndex build_neighbor_index(const SampleSet& points, int k) {
  return NeighborIndex(points, k);
}

double kth_distance_sq(const SampleSet& ref, const double* z, int k,
                       std::ptrdiff_t exclude, std::vector<double>& scratch) {
  const std::size_t n = ref.n;
  const std::size_t avail = (exclude >= 0) ? n - 1 : n;
  if (k < 1 || static_cast<std::size_t>(k) > avail)
    throw std::invalid_argument("kth_distance_sq: k out of range");
  scratch.resize(n);
  for (std::size_t j = 0; j < n; ++j) scratch[j] = sq_dist(z, ref.row(j), ref.d);
  if (exclude >= 0) scratch[exclude] = std::numeric_limits<double>::infinity();
  std::nth_element(scratch.begin(), scratch.begin() + (k - 1), scratch.end());
  return scratch[k - 1];
}

int count_balls_containing(const SampleSet& ref, const std::vector<double>& radii_sq,
                           const double* z) {
  int count = 0;
  for (std::size_t j = 0; j < ref.n; ++j)
    if (sq_dist(z, ref.row(j), ref.d) <= radii_sq[j]) ++count;
  return count;
}

int count_within_sq(const SampleSet& ref, const double* z, double r_sq) {
  int count = 0;
  for (std::size_t j = 0; j < ref.n; ++j)
    if (sq_dist(z, ref.row(j), ref.d) <= r_sq) ++count;
  return count;
}

}  // namespace prcurve

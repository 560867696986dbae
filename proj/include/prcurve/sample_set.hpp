// Sample matrices and the train/validation split.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prcurve {

// n points in d dimensions, row-major. Entries must be finite.
struct SampleSet {
  std::vector<double> data;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::string spec_id;  // provenance, empty for external data

  SampleSet() = default;
  SampleSet(std::vector<double> values, std::size_t n_points, std::size_t dim);

  const double* row(std::size_t i) const { return data.data() + i * d; }
  double* row(std::size_t i) { return data.data() + i * d; }
};

// Throws std::invalid_argument on shape mismatch or non-finite entries.
void validate(const SampleSet& s);

struct SplitPool {
  SampleSet train_x, val_x, train_y, val_y;
  double split_ratio = 1.0;
  bool split_applied = false;
};

// split_ratio is the training fraction; 1 means no split (train == val).
// When applied, train/validation are disjoint index subsets drawn from a
// seeded shuffle, so the split is reproducible.
SplitPool make_split(const SampleSet& x, const SampleSet& y, double split_ratio,
                     std::uint64_t seed);

}  // namespace prcurve

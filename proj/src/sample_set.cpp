#include "prcurve/sample_set.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "prcurve/rng.hpp"

namespace prcurve {
namespace {

// Stream tags for the split shuffles; sampling streams live in sampling.cpp.
constexpr std::uint64_t kSplitStreamX = 0x73706c4958ull;  // "splIX"
constexpr std::uint64_t kSplitStreamY = 0x73706c4959ull;  // "splIY"

SampleSet take_rows(const SampleSet& src, const std::vector<std::size_t>& idx,
                    std::size_t lo, std::size_t hi) {
  SampleSet out;
  out.n = hi - lo;
  out.d = src.d;
  out.seed = src.seed;
  out.spec_id = src.spec_id;
  out.data.resize(out.n * out.d);
  for (std::size_t r = lo; r < hi; ++r) {
    const double* s = src.row(idx[r]);
    std::copy(s, s + src.d, out.row(r - lo));
  }
  return out;
}

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed,
                                          std::uint64_t stream) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Rng rng(seed, stream);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

}  // namespace

SampleSet::SampleSet(std::vector<double> values, std::size_t n_points, std::size_t dim)
    : data(std::move(values)), n(n_points), d(dim) {
  validate(*this);
}

void validate(const SampleSet& s) {
  if (s.n < 1 || s.d < 1) throw std::invalid_argument("SampleSet: need n >= 1 and d >= 1");
  if (s.data.size() != s.n * s.d)
    throw std::invalid_argument("SampleSet: data size does not match n * d");
  for (double v : s.data)
    if (!std::isfinite(v)) throw std::invalid_argument("SampleSet: non-finite entry");
}

SplitPool make_split(const SampleSet& x, const SampleSet& y, double split_ratio,
                     std::uint64_t seed) {
  if (!(split_ratio > 0.0) || split_ratio > 1.0)
    throw std::invalid_argument("make_split: split_ratio must be in (0, 1]");
  if (x.d != y.d) throw std::invalid_argument("make_split: dimension mismatch");

  SplitPool pool;
  pool.split_ratio = split_ratio;
  pool.split_applied = split_ratio < 1.0;
  if (!pool.split_applied) {
    pool.train_x = x;
    pool.val_x = x;
    pool.train_y = y;
    pool.val_y = y;
    return pool;
  }
  if (x.n < 2 || y.n < 2)
    throw std::invalid_argument("make_split: need at least 2 points per side to split");

  auto cut = [&](std::size_t n) {
    auto k = static_cast<std::size_t>(std::llround(split_ratio * static_cast<double>(n)));
    if (k < 1) k = 1;
    if (k > n - 1) k = n - 1;
    return k;
  };
  const auto ix = shuffled_indices(x.n, seed, kSplitStreamX);
  const auto iy = shuffled_indices(y.n, seed, kSplitStreamY);
  const std::size_t cx = cut(x.n);
  const std::size_t cy = cut(y.n);
  pool.train_x = take_rows(x, ix, 0, cx);
  pool.val_x = take_rows(x, ix, cx, x.n);
  pool.train_y = take_rows(y, iy, 0, cy);
  pool.val_y = take_rows(y, iy, cy, y.n);
  return pool;
}

}  // namespace prcurve

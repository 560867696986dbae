// One-parameter classifier families. Every family reduces a query point to a
// pair of normalized class scores (a, b) that do not depend on gamma; the
// decision rule then compares gamma * a against b, with a loose inequality
// for gamma >= 1 and a strict one for gamma < 1 so that swapping the classes
// and inverting gamma complements the prediction.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "prcurve/neighbor.hpp"
#include "prcurve/sample_set.hpp"

namespace prcurve {

enum class Method { ipr, knn, parzen, coverage };

const char* method_name(Method m);

// Class scores for one query point. Counts are kept as integers so that
// decision comparisons can be done on exactly representable products.
struct PointScores {
  int count_x = 0;  // training-X evidence at the point
  int count_y = 0;  // training-Y evidence
  int n_x = 1;
  int n_y = 1;

  double a() const { return static_cast<double>(count_x) / n_x; }
  double b() const { return static_cast<double>(count_y) / n_y; }
};

// When a query aliases a training point (no-split evaluation), its own entry
// is excluded from k-th neighbor radii; membership counts keep it.
struct SelfRef {
  std::ptrdiff_t in_x = -1;
  std::ptrdiff_t in_y = -1;
};

// gamma may be 0, finite positive, or +infinity:
//   gamma >= 1:  1{gamma a >= b}        gamma < 1:  1{gamma a > b}
//   gamma = inf: 1{a > 0}               gamma = 0:  1{a > 0 and b == 0}
bool predict(const PointScores& s, double gamma);

class ClassifierFamily {
 public:
  Method method() const { return method_; }
  std::size_t dim() const { return x_.d; }
  int k() const { return k_; }
  double rho_x() const { return rho_x_; }
  double rho_y() const { return rho_y_; }
  const SampleSet& train_x() const { return x_; }
  const SampleSet& train_y() const { return y_; }

  // scratch must be reusable storage (per thread when parallel).
  PointScores scores(const double* z, SelfRef self, std::vector<double>& scratch) const;
  bool evaluate(double gamma, std::span<const double> z) const;

  friend ClassifierFamily make_family(Method, const SampleSet&, const SampleSet&, int, int);

 private:
  ClassifierFamily() = default;

  Method method_ = Method::knn;
  SampleSet x_, y_;
  int k_ = 1;
  std::vector<double> radii_sq_x_, radii_sq_y_;  // ipr
  double rho_x_ = 0.0, rho_y_ = 0.0;             // parzen bandwidths
  double rho_sq_x_ = 0.0, rho_sq_y_ = 0.0;
};

// Fits the family. parzen_k < 1 means "use k" for the bandwidth radii.
// Throws std::invalid_argument on empty sets or an out-of-range k.
ClassifierFamily make_family(Method method, const SampleSet& train_x,
                             const SampleSet& train_y, int k, int parzen_k = -1);

}  // namespace prcurve

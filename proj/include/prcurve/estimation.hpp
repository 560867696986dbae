// Curve estimation: empirical error rates, the ERM curve over a classifier
// family with trivial-classifier clamping, and the published extreme-value
// scalar estimators evaluated verbatim on raw (unsplit) sample sets.
#pragma once

#include <cstdint>
#include <functional>

#include "prcurve/classifier.hpp"
#include "prcurve/curve.hpp"
#include "prcurve/sample_set.hpp"

namespace prcurve {

struct KRule {
  enum class Kind { fixed, sqrt_n };
  Kind kind = Kind::sqrt_n;
  int k = 4;  // used when kind == fixed

  static KRule fixed(int k) { return {Kind::fixed, k}; }
  static KRule sqrt_n() { return {Kind::sqrt_n, 0}; }

  // Resolved against the fitting-set size (per side, after any split).
  int resolve(std::size_t n_train) const;
};

struct EstimatorConfig {
  Method method = Method::knn;
  KRule k_rule = KRule::sqrt_n();
  double split_ratio = 0.5;  // training fraction; 1 = no split
  int lambda_points = 201;
  int gamma_points = 201;
  int parzen_k = -1;  // < 1: reuse the resolved k
  std::uint64_t seed = 0;
};

struct RatePair {
  double fpr;
  double fnr;
};

// fpr = mean over val_x of (1 - f), fnr = mean over val_y of f.
RatePair empirical_rates(const ClassifierFamily& family, double gamma,
                         const SampleSet& val_x, const SampleSet& val_y);

// Same rates for an arbitrary classifier; used by tests and the trivial
// classifiers f == 0 / f == 1.
RatePair empirical_rates_of(const std::function<bool(const double*)>& f,
                            const SampleSet& val_x, const SampleSet& val_y);

// The ERM curve: splits, fits the family on the training halves, and for
// every lambda on the grid takes the minimum of lambda * fpr + fnr over the
// gamma values plus the trivial classifiers. The result is concave,
// nondecreasing, and <= min(lambda, 1) by construction; a post-pass asserts
// this rather than repairing it.
PrCurve estimate_curve(const SampleSet& x, const SampleSet& y, const EstimatorConfig& cfg);

enum class ExtremeKind { ipr, coverage, eas, prc, ppr };
enum class PprForm { complement, as_written };

struct ExtremeParams {
  int k = 4;
  int k_prime = 1;               // prc only
  PprForm ppr_form = PprForm::complement;
};

// Extreme-precision scalar estimates in [0, 1], on raw unsplit sets.
// prc with k_prime = 1 equals coverage exactly; eas = min(ipr, coverage).
double extreme_scalar(ExtremeKind kind, const SampleSet& x, const SampleSet& y,
                      const ExtremeParams& params);

}  // namespace prcurve

// Precision-recall curves: ordered (lambda, alpha, beta) triples forming a
// Pareto frontier, plus the geometry shared by area, IoU and median code.
#pragma once

#include <iosfwd>
#include <vector>

namespace prcurve {

enum class CurveKind { empirical, analytic, mc_ground_truth };

struct CurvePoint {
  double lambda;
  double alpha;
  double beta;
};

// Invariants, checked on construction:
//   lambda > 0, finite, strictly increasing;
//   beta == alpha / lambda to 1e-12 relative;
//   alpha nondecreasing, beta nonincreasing;
//   alpha in [0, 1 + 1e-9] (raw values; clamping lives in estimation).
class PrCurve {
 public:
  PrCurve(std::vector<CurvePoint> points, CurveKind kind);

  const std::vector<CurvePoint>& points() const { return points_; }
  CurveKind kind() const { return kind_; }
  std::size_t size() const { return points_.size(); }

  // Copy with alpha and beta clamped to [0, 1]; lambda untouched.
  PrCurve clamped_unit() const;

 private:
  std::vector<CurvePoint> points_;
  CurveKind kind_;
};

// Upper envelope of the region under a curve in the (beta, alpha) unit
// square: F(x) = the largest alpha the frontier allows at recall x. The
// region is down-closed, so it extends flat at alpha_max left of the
// smallest beta and is empty right of the largest beta.
class CurveEnvelope {
 public:
  explicit CurveEnvelope(const PrCurve& curve);

  double value(double beta) const;
  double area() const;  // exact trapezoid over the polyline nodes

  // Integral over [0, 1] of max(0, F(x) - ray_slope * x); exact per segment.
  double area_above_ray(double ray_slope) const;

 private:
  std::vector<double> beta_;   // ascending
  std::vector<double> alpha_;  // nonincreasing along beta_
};

// Area under the curve inside the unit square, in [0, 1].
// Throws std::invalid_argument on an empty curve.
double curve_area(const PrCurve& curve);

// CSV with header "lambda,alpha,beta", lambda-ascending, 17 significant digits.
void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points);
PrCurve read_curve_csv(std::istream& in, CurveKind kind);

}  // namespace prcurve

#include "prcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace prcurve {
namespace {

constexpr double kRatioTol = 1e-12;   // beta * lambda vs alpha
constexpr double kMonoTol = 1e-12;    // slack for fp noise in monotonicity
constexpr double kAlphaCap = 1.0 + 1e-9;

void check_invariants(const std::vector<CurvePoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("PrCurve: empty point list");
  double prev_lambda = 0.0;
  double prev_alpha = -std::numeric_limits<double>::infinity();
  double prev_beta = std::numeric_limits<double>::infinity();
  for (const CurvePoint& p : pts) {
    if (!(p.lambda > 0.0) || !std::isfinite(p.lambda))
      throw std::invalid_argument("PrCurve: lambda must be positive and finite");
    if (!(p.lambda > prev_lambda))
      throw std::invalid_argument("PrCurve: lambda must be strictly increasing");
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta))
      throw std::invalid_argument("PrCurve: non-finite alpha or beta");
    if (p.alpha < -kMonoTol || p.alpha > kAlphaCap)
      throw std::invalid_argument("PrCurve: alpha out of [0, 1+eps]");
    const double scale = std::max({1.0, std::fabs(p.alpha)});
    if (std::fabs(p.beta * p.lambda - p.alpha) > kRatioTol * scale * std::max(1.0, p.lambda))
      throw std::invalid_argument("PrCurve: beta != alpha / lambda");
    if (p.alpha < prev_alpha - kMonoTol)
      throw std::invalid_argument("PrCurve: alpha must be nondecreasing in lambda");
    if (p.beta > prev_beta + kMonoTol)
      throw std::invalid_argument("PrCurve: beta must be nonincreasing in lambda");
    prev_lambda = p.lambda;
    prev_alpha = p.alpha;
    prev_beta = p.beta;
  }
}

}  // namespace

PrCurve::PrCurve(std::vector<CurvePoint> points, CurveKind kind)
    : points_(std::move(points)), kind_(kind) {
  check_invariants(points_);
}

PrCurve PrCurve::clamped_unit() const {
  std::vector<CurvePoint> pts = points_;
  for (CurvePoint& p : pts) {
    p.alpha = std::clamp(p.alpha, 0.0, 1.0);
    p.beta = std::clamp(p.beta, 0.0, 1.0);
  }
  return PrCurve(std::move(pts), kind_);
}

CurveEnvelope::CurveEnvelope(const PrCurve& curve) {
  // lambda-descending order is beta-ascending, alpha-nonincreasing.
  const auto& pts = curve.points();
  beta_.reserve(pts.size());
  alpha_.reserve(pts.size());
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    const double b = std::clamp(it->beta, 0.0, 1.0);
    const double a = std::clamp(it->alpha, 0.0, 1.0);
    if (!beta_.empty() && b == beta_.back()) continue;  // keep max alpha at equal beta
    beta_.push_back(b);
    alpha_.push_back(a);
  }
}

double CurveEnvelope::value(double x) const {
  if (x <= beta_.front()) return alpha_.front();
  if (x > beta_.back()) return 0.0;
  const auto it = std::lower_bound(beta_.begin(), beta_.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - beta_.begin());
  if (beta_[hi] == x) return alpha_[hi];
  const std::size_t lo = hi - 1;
  const double t = (x - beta_[lo]) / (beta_[hi] - beta_[lo]);
  return alpha_[lo] + t * (alpha_[hi] - alpha_[lo]);
}

double CurveEnvelope::area() const {
  double area = beta_.front() * alpha_.front();  // flat part left of the frontier
  for (std::size_t i = 0; i + 1 < beta_.size(); ++i)
    area += 0.5 * (alpha_[i] + alpha_[i + 1]) * (beta_[i + 1] - beta_[i]);
  return area;
}

double CurveEnvelope::area_above_ray(double s) const {
  // g(x) = F(x) - s*x is linear on each piece; integrate max(0, g) exactly.
  auto piece = [s](double x0, double x1, double f0, double f1) {
    if (x1 <= x0) return 0.0;
    const double g0 = f0 - s * x0;
    const double g1 = f1 - s * x1;
    if (g0 <= 0.0 && g1 <= 0.0) return 0.0;
    if (g0 >= 0.0 && g1 >= 0.0) return 0.5 * (g0 + g1) * (x1 - x0);
    const double xc = x0 + (x1 - x0) * g0 / (g0 - g1);  // single sign change
    if (g0 > 0.0) return 0.5 * g0 * (xc - x0);
    return 0.5 * g1 * (x1 - xc);
  };
  double total = piece(0.0, beta_.front(), alpha_.front(), alpha_.front());
  for (std::size_t i = 0; i + 1 < beta_.size(); ++i)
    total += piece(beta_[i], beta_[i + 1], alpha_[i], alpha_[i + 1]);
  return total;
}

double curve_area(const PrCurve& curve) {
  if (curve.size() == 0) throw std::invalid_argument("curve_area: empty curve");
  return CurveEnvelope(curve).area();
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points) {
  out << "lambda,alpha,beta\n";
  char buf[96];
  for (const CurvePoint& p : points) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", p.lambda, p.alpha, p.beta);
    out << buf;
  }
}

PrCurve read_curve_csv(std::istream& in, CurveKind kind) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("curve csv: empty input");
  if (line.rfind("lambda,alpha,beta", 0) != 0)
    throw std::invalid_argument("curve csv: missing header");
  std::vector<CurvePoint> pts;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CurvePoint p;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &p.lambda, &p.alpha, &p.beta) != 3)
      throw std::invalid_argument("curve csv: malformed row: " + line);
    pts.push_back(p);
  }
  return PrCurve(std::move(pts), kind);
}

}  // namespace prcurve

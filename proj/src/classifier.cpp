#include "prcurve/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace prcurve {
namespace {

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::ipr: return "ipr";
    case Method::knn: return "knn";
    case Method::parzen: return "parzen";
    case Method::coverage: return "coverage";
  }
  return "unknown";
}

bool predict(const PointScores& s, double gamma) {
  if (std::isnan(gamma) || gamma < 0.0)
    throw std::invalid_argument("predict: gamma must be >= 0 or +inf");
  if (std::isinf(gamma)) return s.count_x > 0;
  if (gamma == 0.0) return s.count_x > 0 && s.count_y == 0;
  // Exact integer cross-products; counts and sizes stay far below 2^26.
  const double u = static_cast<double>(s.count_x) * s.n_y;
  const double v = static_cast<double>(s.count_y) * s.n_x;
  return gamma >= 1.0 ? gamma * u >= v : gamma * u > v;
}

ClassifierFamily make_family(Method method, const SampleSet& train_x,
                             const SampleSet& train_y, int k, int parzen_k) {
  validate(train_x);
  validate(train_y);
  if (train_x.d != train_y.d) throw std::invalid_argument("make_family: dimension mismatch");
  if (k < 1) throw std::invalid_argument("make_family: need k >= 1");

  ClassifierFamily f;
  f.method_ = method;
  f.x_ = train_x;
  f.y_ = train_y;
  f.k_ = k;

  const std::size_t nx = train_x.n;
  const std::size_t ny = train_y.n;
  switch (method) {
    case Method::ipr: {
      f.radii_sq_x_ = NeighborIndex(train_x, k).radii_sq();
      f.radii_sq_y_ = NeighborIndex(train_y, k).radii_sq();
      break;
    }
    case Method::knn: {
      if (static_cast<std::size_t>(k) > nx + ny - 1)
        throw std::invalid_argument("make_family: k too large for the union set");
      break;
    }
    case Method::coverage: {
      if (static_cast<std::size_t>(k) > std::min(nx, ny) - 1)
        throw std::invalid_argument("make_family: k too large for per-class sets");
      break;
    }
    case Method::parzen: {
      const int pk = parzen_k < 1 ? k : parzen_k;
      f.rho_x_ = mean(NeighborIndex(train_x, pk).radii());
      f.rho_y_ = mean(NeighborIndex(train_y, pk).radii());
      f.rho_sq_x_ = f.rho_x_ * f.rho_x_;
      f.rho_sq_y_ = f.rho_y_ * f.rho_y_;
      break;
    }
  }
  return f;
}

PointScores ClassifierFamily::scores(const double* z, SelfRef self,
                                     std::vector<double>& scratch) const {
  PointScores s;
  s.n_x = static_cast<int>(x_.n);
  s.n_y = static_cast<int>(y_.n);
  switch (method_) {
    case Method::ipr: {
      s.count_x = count_balls_containing(x_, radii_sq_x_, z);
      s.count_y = count_balls_containing(y_, radii_sq_y_, z);
      return s;
    }
    case Method::parzen: {
      s.count_x = count_within_sq(x_, z, rho_sq_x_);
      s.count_y = count_within_sq(y_, z, rho_sq_y_);
      return s;
    }
    case Method::knn: {
      // Ball around z within the union; one k-th-distance selection over the
      // concatenated distances, then membership counts per class.
      const std::size_t nx = x_.n, ny = y_.n, nu = nx + ny;
      scratch.resize(2 * nu);
      double* dist = scratch.data();
      double* sel = scratch.data() + nu;
      for (std::size_t j = 0; j < nx; ++j) dist[j] = sq_dist(z, x_.row(j), x_.d);
      for (std::size_t j = 0; j < ny; ++j) dist[nx + j] = sq_dist(z, y_.row(j), y_.d);
      std::copy(dist, dist + nu, sel);
      if (self.in_x >= 0) sel[self.in_x] = std::numeric_limits<double>::infinity();
      if (self.in_y >= 0) sel[nx + self.in_y] = std::numeric_limits<double>::infinity();
      std::nth_element(sel, sel + (k_ - 1), sel + nu);
      const double r_sq = sel[k_ - 1];
      int cx = 0, cy = 0;
      for (std::size_t j = 0; j < nx; ++j) cx += dist[j] <= r_sq;
      for (std::size_t j = 0; j < ny; ++j) cy += dist[nx + j] <= r_sq;
      s.count_x = cx;
      s.count_y = cy;
      return s;
    }
    case Method::coverage: {
      // a: X mass inside the Y-ball of z; b: Y mass inside the X-ball of z.
      const std::size_t nx = x_.n, ny = y_.n;
      scratch.resize(2 * (nx + ny));
      double* dx = scratch.data();
      double* dy = dx + nx;
      double* sel = dy + ny;
      for (std::size_t j = 0; j < nx; ++j) dx[j] = sq_dist(z, x_.row(j), x_.d);
      for (std::size_t j = 0; j < ny; ++j) dy[j] = sq_dist(z, y_.row(j), y_.d);

      auto kth_of = [this, sel](const double* d, std::size_t n, std::ptrdiff_t excl) {
        std::copy(d, d + n, sel);
        if (excl >= 0) sel[excl] = std::numeric_limits<double>::infinity();
        std::nth_element(sel, sel + (k_ - 1), sel + n);
        return sel[k_ - 1];
      };
      const double r_y_sq = kth_of(dy, ny, self.in_y);
      const double r_x_sq = kth_of(dx, nx, self.in_x);
      int cx = 0, cy = 0;
      for (std::size_t j = 0; j < nx; ++j) cx += dx[j] <= r_y_sq;
      for (std::size_t j = 0; j < ny; ++j) cy += dy[j] <= r_x_sq;
      s.count_x = cx;
      s.count_y = cy;
      return s;
    }
  }
  throw std::logic_error("scores: unknown method");
}

bool ClassifierFamily::evaluate(double gamma, std::span<const double> z) const {
  if (z.size() != x_.d) throw std::invalid_argument("evaluate: dimension mismatch");
  std::vector<double> scratch;
  return predict(scores(z.data(), SelfRef{}, scratch), gamma);
}

}  // namespace prcurve

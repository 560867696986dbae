#include "prcurve/grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace prcurve {

LambdaGrid make_lambda_grid(int n_points) {
  if (n_points < 3) throw std::invalid_argument("make_lambda_grid: need n_points >= 3");
  const double half_pi = 2.0 * std::atan(1.0);  // pi/2
  LambdaGrid g;
  g.thetas.reserve(n_points);
  g.lambdas.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double theta = (i + 0.5) * half_pi / n_points;
    g.thetas.push_back(theta);
    g.lambdas.push_back(std::tan(theta));
  }
  return g;
}

std::vector<double> make_gamma_values(int n_points) {
  const LambdaGrid g = make_lambda_grid(n_points);
  std::vector<double> out;
  out.reserve(g.size() + 2);
  out.push_back(0.0);
  out.insert(out.end(), g.lambdas.begin(), g.lambdas.end());
  out.push_back(std::numeric_limits<double>::infinity());
  return out;
}

}  // namespace prcurve

// Trade-off parameter grids. Lambda values come from uniform bin midpoints
// of the angle theta in (0, pi/2) mapped through tan, which bijects onto
// (0, inf) and makes the grid symmetric under lambda -> 1/lambda.
#pragma once

#include <vector>

namespace prcurve {

struct LambdaGrid {
  std::vector<double> thetas;   // strictly increasing, in (0, pi/2)
  std::vector<double> lambdas;  // tan(theta), strictly increasing, all > 0

  std::size_t size() const { return lambdas.size(); }
};

// theta_i = (i + 0.5) * (pi/2) / n_points, lambda_i = tan(theta_i).
// Throws std::invalid_argument for n_points < 3.
LambdaGrid make_lambda_grid(int n_points);

// Classifier-weight search values: {0} + the lambda-grid values + {+inf}.
// The same midpoint construction serves both parameters.
std::vector<double> make_gamma_values(int n_points);

}  // namespace prcurve

// Chernoff coefficient and the resulting upper bound on alpha_lambda for
// product Gaussians: alpha_lambda <= lambda^gamma * C(p, q)^d.
#pragma once

namespace prcurve {

struct ChernoffResult {
  double coefficient;   // C in [0, 1]; 1 iff psi == 1
  double argmin_gamma;  // minimizer in [0, 1]
  double divergence;    // -log C, nonnegative
};

// m(gamma) = E_{Q_psi}[(dP/dQ_psi)^gamma] for the 1-D pair N(0,1), N(0,psi^2):
//   m(gamma) = psi^gamma * (1 + gamma (psi^2 - 1))^(-1/2).
double chernoff_m(double psi, double gamma);

// Minimizes m over gamma in [0, 1] by golden section, |d gamma| < 1e-10.
ChernoffResult chernoff_coefficient(double psi);

// lambda^gamma * m(gamma)^d for a fixed exponent gamma in (0, 1).
// Always >= analytic_alpha_scale(psi, lambda, d).
double chernoff_bound(double psi, double lambda, int d, double gamma);

}  // namespace prcurve

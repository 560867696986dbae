// Exact precision-recall analytics for the pair P = N(0, I_d) versus
// Q_psi = N(0, psi^2 I_d). The likelihood ratio is radial, so the Bayes
// region at weight lambda is a centered ball or its complement, and alpha
// reduces to chi tail probabilities.
#pragma once

#include "prcurve/curve.hpp"
#include "prcurve/grid.hpp"

namespace prcurve {

enum class RegionOrientation { accept_inside, accept_outside, accept_all, accept_none };

struct DecisionRegion {
  double threshold;  // radius; finite unless accept_all / accept_none
  RegionOrientation orientation;
};

// Region {x : lambda dP(x) >= dQ_psi(x)}, derived from the likelihood-ratio
// condition r_psi(x) >= 1/lambda. For every finite threshold T returned,
// r_psi(T) * lambda == 1. psi == 1 is degenerate and rejected here
// (analytic_alpha_scale handles it directly).
DecisionRegion scale_threshold(double psi, double lambda, int d);

// P(||x|| >= t) for x ~ N(0, I_d); equals Q(d/2, t^2/2). Primary path.
double chi_tail(int d, double t);

// Same quantity via the integration-by-parts recurrence
//   J_m(t) = t^(m-1) e^(-t^2/2) + (m-1) J_(m-2)(t),
// with bases J_1 = e^(-t^2/2) and J_0 = sqrt(2 pi) (1 - Phi(t)), run in a
// scaled form so it stays in double range for d up to several hundred.
// Kept as an independent cross-check of chi_tail.
double chi_tail_recurrence(int d, double t);

// Exact alpha_lambda(P, Q_psi) = lambda * fpr + fnr of the Bayes region.
// psi == 1 returns min(lambda, 1). Result lies in [0, min(lambda, 1)].
double analytic_alpha_scale(double psi, double lambda, int d);

// analytic_alpha_scale mapped over a grid.
PrCurve analytic_curve_scale(double psi, int d, const LambdaGrid& grid);

}  // namespace prcurve

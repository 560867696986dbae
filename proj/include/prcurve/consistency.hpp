// Checkable pieces of the kNN consistency analysis: the binomial risk
// function mu_lambda(p) and the asymptotic weighted kNN risk by Monte Carlo.
#pragma once

#include <cstdint>

#include "prcurve/distribution.hpp"

namespace prcurve {

// mu_lambda(p) = lambda p P{Binom(k,p) < k/(lambda+1)}
//              + (1-p)   P{Binom(k,p) > k/(lambda+1)}.
// Both inequalities are strict; an integer threshold excludes its atom.
double mu_lambda(double p, int k, double lambda);

// Same value with the binomial CDF summed directly in log space; kept as an
// independent cross-check of the incomplete-beta route.
double mu_lambda_direct(double p, int k, double lambda);

// Pointwise limit of mu_lambda as k grows: min(lambda p, 1 - p).
double mu_lambda_limit(double p, double lambda);

// Hoeffding envelope on |mu_lambda(p) - limit|: (lambda + 1) exp(-2 k delta^2)
// with delta = |1/(lambda+1) - p|.
double mu_lambda_bound(double p, int k, double lambda);

// Monte-Carlo estimate of 2 E[mu_lambda(eta(Z))] with Z ~ (P+Q)/2 and
// eta = dP/d(P+Q) evaluated through the log density ratio. Deterministic
// per seed; n_mc >= 1000.
double asymptotic_knn_risk(const DistributionSpec& p_spec, const DistributionSpec& q_spec,
                           int k, double lambda, std::size_t n_mc, std::uint64_t seed);

}  // namespace prcurve

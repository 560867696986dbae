// Special functions backing the analytic oracles: normal CDF, regularized
// incomplete gamma and beta, and two independent binomial CDF routes.
#pragma once

namespace prcurve {

// Standard normal CDF.
double norm_cdf(double t);

// Regularized lower/upper incomplete gamma P(a, x), Q(a, x); a > 0, x >= 0.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b); a, b > 0, x in [0, 1].
double beta_inc(double a, double b, double x);

// P{Binomial(n, p) <= k}, evaluated through the incomplete beta.
double binom_cdf(long k, long n, double p);

// Same quantity by direct log-space summation of the pmf. Kept as an
// independent cross-check of binom_cdf.
double binom_cdf_direct(long k, long n, double p);

}  // namespace prcurve

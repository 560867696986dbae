#include "prcurve/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace prcurve {
namespace {

constexpr int kMaxIter = 500;
const double kEps = std::numeric_limits<double>::epsilon();
const double kFpMin = std::numeric_limits<double>::min() / kEps;

// Series representation of P(a, x); converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int i = 0; i < kMaxIter; ++i) {
    ++ap;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps)
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw std::runtime_error("gamma_p: series did not converge");
}

// Continued fraction for Q(a, x) (modified Lentz); converges for x > a + 1.
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps)
      return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw std::runtime_error("gamma_q: continued fraction did not converge");
}

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h;
  }
  throw std::runtime_error("beta_inc: continued fraction did not converge");
}

}  // namespace

double norm_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }

double gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("gamma_p: need a > 0, x >= 0");
  if (x == 0.0) return 0.0;
  return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("gamma_q: need a > 0, x >= 0");
  if (x == 0.0) return 1.0;
  return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double beta_inc(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("beta_inc: need a, b > 0");
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("beta_inc: need x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double lbt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                     a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(lbt);
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double binom_cdf(long k, long n, double p) {
  if (n < 1) throw std::invalid_argument("binom_cdf: need n >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("binom_cdf: need p in [0, 1]");
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  // P{B <= k} = I_{1-p}(n - k, k + 1)
  return beta_inc(static_cast<double>(n - k), static_cast<double>(k + 1), 1.0 - p);
}

double binom_cdf_direct(long k, long n, double p) {
  if (n < 1) throw std::invalid_argument("binom_cdf_direct: need n >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("binom_cdf_direct: need p in [0, 1]");
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  const double lgn = std::lgamma(n + 1.0);
  // Sum whichever tail has fewer terms, then complement if needed.
  const bool lower = k <= n / 2;
  const long lo = lower ? 0 : k + 1;
  const long hi = lower ? k : n;
  double sum = 0.0;
  for (long j = lo; j <= hi; ++j) {
    const double lpmf = lgn - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) +
                        j * lp + (n - j) * lq;
    sum += std::exp(lpmf);
  }
  if (lower) return std::min(1.0, sum);
  return std::max(0.0, 1.0 - sum);
}

}  // namespace prcurve

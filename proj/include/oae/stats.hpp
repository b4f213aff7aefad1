#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>

#include "oae/errors.hpp"

namespace oae {

// Two-sample comparison with unequal variances. Group A is the improved
// group by convention, so t > 0 means the improved mean is larger.
struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
  double mean_a = 0.0, sd_a = 0.0;
  std::size_t n_a = 0;
  double mean_b = 0.0, sd_b = 0.0;
  std::size_t n_b = 0;
};

namespace detail {

// Continued fraction for the regularized incomplete beta function,
// evaluated with the modified Lentz scheme.
inline double beta_continued_fraction(double a, double b, double x) {
  constexpr double eps = 1e-12;
  constexpr double fpmin = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace detail

inline double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw Error(ErrorCode::invalid_input, "beta shape parameters must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * detail::beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * detail::beta_continued_fraction(b, a, 1.0 - x) / b;
}

inline double student_t_cdf(double t, double df) {
  if (!(df > 0.0))
    throw Error(ErrorCode::invalid_input, "degrees of freedom must be positive");
  if (t == 0.0) return 0.5;
  const double x = df / (df + t * t);
  const double tail = 0.5 * regularized_incomplete_beta(0.5 * df, 0.5, x);
  return t > 0.0 ? 1.0 - tail : tail;
}

inline WelchResult welch_t_from_summary(double mean_a, double sd_a, std::size_t n_a,
                                        double mean_b, double sd_b, std::size_t n_b) {
  if (n_a < 2 || n_b < 2)
    throw Error(ErrorCode::invalid_input, "each group needs at least two observations");
  const double va = sd_a * sd_a / static_cast<double>(n_a);
  const double vb = sd_b * sd_b / static_cast<double>(n_b);
  const double se2 = va + vb;
  if (!(se2 > 0.0))
    throw Error(ErrorCode::degenerate_variance,
                "both groups have zero variance; t statistic undefined");
  WelchResult r;
  r.mean_a = mean_a; r.sd_a = sd_a; r.n_a = n_a;
  r.mean_b = mean_b; r.sd_b = sd_b; r.n_b = n_b;
  r.t = (mean_a - mean_b) / std::sqrt(se2);
  r.df = se2 * se2 /
         (va * va / static_cast<double>(n_a - 1) + vb * vb / static_cast<double>(n_b - 1));
  r.p = std::clamp(2.0 * (1.0 - student_t_cdf(std::fabs(r.t), r.df)), 0.0, 1.0);
  return r;
}

inline WelchResult welch_t(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2)
    throw Error(ErrorCode::invalid_input, "each group needs at least two observations");
  const auto summarize = [](std::span<const double> v, double& mean, double& sd) {
    double s = 0.0;
    for (double x : v) s += x;
    mean = s / static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
  };
  double ma, sa, mb, sb;
  summarize(a, ma, sa);
  summarize(b, mb, sb);
  return welch_t_from_summary(ma, sa, a.size(), mb, sb, b.size());
}

}  // namespace oae

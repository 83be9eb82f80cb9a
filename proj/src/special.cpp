// Copyright 2026 the smoothq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smoothq/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace smoothq {

BetaParams::BetaParams(double a, double b) : alpha(a), beta(b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("BetaParams: shape parameters must be positive finite, got alpha=" +
                            std::to_string(a) + " beta=" + std::to_string(b));
  }
}

double log_gamma(double x) {
  // Lanczos, g = 7, 9 coefficients.
  static constexpr double kCoef[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive");
  }
  if (x < 0.5) {
    // reflection keeps the series argument away from zero
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double sum = kCoef[0];
  for (int i = 1; i < 9; ++i) {
    sum += kCoef[i] / (z + i);
  }
  const double base = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(base) - base +
         std::log(sum);
}

double log_beta(double a, double b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

namespace {

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double beta_cont_frac(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kRelTol = 1e-14;
  const double cutoff = 2.0 * std::numeric_limits<double>::min();

  double num = 1.0;
  double den = 1.0 - (a + b) * x / (a + 1.0);
  if (std::fabs(den) < cutoff) den = cutoff;
  den = 1.0 / den;
  double cf = den;

  for (int it = 1; it <= kMaxIter; ++it) {
    const double k = static_cast<double>(it);
    double coeff = k * (b - k) * x / (((a - 1.0) + 2.0 * k) * (a + 2.0 * k));

    den = 1.0 + coeff * den;
    num = 1.0 + coeff / num;
    if (std::fabs(den) < cutoff) den = cutoff;
    if (std::fabs(num) < cutoff) num = cutoff;
    den = 1.0 / den;
    cf *= den * num;

    coeff = -(a + k) * (a + b + k) * x / ((a + 2.0 * k) * (a + 2.0 * k + 1.0));

    den = 1.0 + coeff * den;
    num = 1.0 + coeff / num;
    if (std::fabs(den) < cutoff) den = cutoff;
    if (std::fabs(num) < cutoff) num = cutoff;
    den = 1.0 / den;
    const double delta = den * num;
    cf *= delta;

    if (std::fabs(delta - 1.0) < kRelTol) {
      return cf;
    }
  }
  throw std::runtime_error("beta_cdf: continued fraction did not converge in 500 iterations");
}

}  // namespace

double beta_cdf(double x, const BetaParams& params) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("beta_cdf: x must lie in [0, 1], got " + std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double a = params.alpha;
  const double b = params.beta;
  const double log_pre = -log_beta(a, b) + a * std::log(x) + b * std::log1p(-x);
  const double pre = std::exp(log_pre);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return pre * beta_cont_frac(a, b, x) / a;
  }
  return 1.0 - pre * beta_cont_frac(b, a, 1.0 - x) / b;
}

double beta_pdf(double x, const BetaParams& params) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("beta_pdf: x must lie in [0, 1], got " + std::to_string(x));
  }
  const double a = params.alpha;
  const double b = params.beta;
  if (x == 0.0) {
    if (a < 1.0) {
      throw std::domain_error("beta_pdf: density is singular at x=0 for alpha < 1");
    }
    return a == 1.0 ? b : 0.0;
  }
  if (x == 1.0) {
    if (b < 1.0) {
      throw std::domain_error("beta_pdf: density is singular at x=1 for beta < 1");
    }
    return b == 1.0 ? a : 0.0;
  }
  return std::exp(-log_beta(a, b) + (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x));
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile: p must lie in (0, 1), got " + std::to_string(p));
  }
  // Acklam's rational approximation (~1e-9), then one Newton step.
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double z;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    z = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    z = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    z = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  const double density =
      std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
  if (density > 0.0) {
    z -= (normal_cdf(z) - p) / density;
  }
  return z;
}

}  // namespace smoothq

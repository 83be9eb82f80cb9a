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

#ifndef SMOOTHQ_SPECIAL_HPP
#define SMOOTHQ_SPECIAL_HPP

namespace smoothq {

/// Shape parameters of a beta distribution. Both must be strictly positive.
struct BetaParams {
  double alpha;
  double beta;

  BetaParams(double a, double b);
};

/// Natural log of the gamma function for x > 0 (Lanczos approximation).
double log_gamma(double x);

/// log Beta(a, b) = lgamma(a) + lgamma(b) - lgamma(a + b).
double log_beta(double a, double b);

/// Regularized incomplete beta function I_x(alpha, beta) for x in [0, 1].
///
/// Continued-fraction evaluation with the symmetry switch at
/// x > (alpha + 1) / (alpha + beta + 2). Relative tolerance 1e-14; a
/// non-converging fraction raises std::runtime_error rather than returning
/// a partial value.
double beta_cdf(double x, const BetaParams& params);

/// Beta density x^(a-1) (1-x)^(b-1) / Beta(a, b) for x in [0, 1].
///
/// The density is unbounded at x = 0 when alpha < 1 and at x = 1 when
/// beta < 1; those evaluations raise std::domain_error instead of
/// returning an infinity.
double beta_pdf(double x, const BetaParams& params);

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile for p in (0, 1). Rational approximation
/// refined by one Newton step; absolute error below 1e-13.
double normal_quantile(double p);

}  // namespace smoothq

#endif  // SMOOTHQ_SPECIAL_HPP

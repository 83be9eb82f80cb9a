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

#ifndef SMOOTHQ_TRUNCATION_HPP
#define SMOOTHQ_TRUNCATION_HPP

#include <string_view>
#include <vector>

#include "smoothq/count_model.hpp"
#include "smoothq/discrete_sample.hpp"

namespace smoothq {

/// Finite truncation window [lower, upper] = mean +/- k*sd (lower clamped at
/// -0.5 for count data) with the integer support points inside it and the
/// truncated CDF evaluated at each of them. Cuts land on non-integers by
/// construction, where the step CDF is flat, so the truncated CDF is exact:
/// f_star.front() carries the full mass of the first support point (the
/// implicit predecessor value is 0) and f_star.back() == 1.
struct TruncationDesign {
  double k = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<long long> support;  // y_1 < ... < y_d
  std::vector<double> f_star;      // truncated CDF at each support point
  double cdf_at_lower = 0.0;       // untruncated law at the cuts
  double cdf_at_upper = 0.0;

  int d() const { return static_cast<int>(support.size()); }
};

/// Which integers form the support of an empirical design.
///
/// `window_integers` takes every integer in the window (the resampling
/// algorithm's construction); unobserved values inside the window then carry
/// zero weight but still enter the kernel's dimension d. `observed_values`
/// keeps only distinct observed values, which drops zero-mass points and
/// shrinks d accordingly; data analyses (C5NS, tail probabilities) use this
/// form.
enum class SupportPolicy { window_integers, observed_values };

/// Truncation design of a parametric model, built from its exact moments.
TruncationDesign population_design(const CountModel& model, double k);

/// Truncation design of a sample, built from its sample moments and ECDF.
TruncationDesign empirical_design(const DiscreteSample& sample, double k,
                                  SupportPolicy policy = SupportPolicy::window_integers);

/// Lower bound on the probability mass captured by a mean +/- k*sd window:
/// the asymptotic bound 1 - 1/k^2, or its finite-sample analogue when the
/// moments are estimated from n observations.
double coverage_bound(double k);
double coverage_bound(double k, long long n);

/// Accepts `pi`, `pi2`, `pi3` or a literal real.
double parse_k(std::string_view text);

}  // namespace smoothq

#endif  // SMOOTHQ_TRUNCATION_HPP

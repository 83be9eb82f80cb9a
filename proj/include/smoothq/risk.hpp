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

#ifndef SMOOTHQ_RISK_HPP
#define SMOOTHQ_RISK_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "smoothq/discrete_sample.hpp"
#include "smoothq/truncation.hpp"

namespace smoothq {

/// The five levels of the conditional five number summary above VaR_p:
/// affine maps of p giving the conditional 10th, 25th, 50th, 75th and 90th
/// percentiles of the tail beyond the VaR level.
std::array<double, 5> c5ns_levels(double p);

/// Conditional five number summary with pointwise normal-theory intervals.
///
/// The related conditional tail median — median(Y | Y > VaR_p) — coincides
/// with the middle entry only for continuous laws; for discrete data this
/// summary reports the smoothed quantile itself, not a separate CTM
/// estimator.
struct C5nsResult {
  double p = 0.0;
  double confidence = 0.0;
  std::array<double, 5> levels{};
  std::array<double, 5> quantiles{};
  std::array<std::pair<double, double>, 5> intervals{};
  double var_smoothed = 0.0;     // smoothed quantile at level p
  long long var_classical = 0;   // generalized-inverse quantile of the raw ECDF
};

/// C5NS on a data sample: smoothed quantiles on the observed-support design
/// at the window-mapped levels, with plug-in asymptotic intervals.
C5nsResult c5ns_summary(const DiscreteSample& sample, double p, double k, double confidence);

/// Classical generalized-inverse VaR on the raw ECDF: the smallest observed
/// value y with ecdf(y) >= p.
long long var_classical(const DiscreteSample& sample, double p);

/// Tail probability of the smoothed variable beyond threshold a. Integer
/// thresholds receive the +0.5 continuity correction; the smoothed quantile
/// function is then inverted by bisection and the resulting truncated level
/// is mapped back to the original scale.
double smoothed_tail_prob(const DiscreteSample& sample, double k, double a);
double smoothed_tail_prob(const TruncationDesign& design, double a);

/// Discrete tail probability: exact beyond integer thresholds, linear
/// interpolation of the two adjacent integer tails otherwise.
double interpolated_tail_prob(const DiscreteSample& sample, double a);

enum class TailMethod { smoothed, interpolated };

struct TailProbEstimate {
  double threshold = 0.0;            // the requested a
  double corrected_threshold = 0.0;  // a* after the continuity correction
  TailMethod method = TailMethod::smoothed;
  double mean = 0.0;
  double sd = 0.0;
  std::optional<double> cv;  // absent when the bootstrap mean is zero
};

/// Bootstrap dispersion of a tail-probability estimate: mean, standard
/// deviation (m-1 divisor) and coefficient of variation over m resamples.
TailProbEstimate tail_prob_bootstrap(const DiscreteSample& sample, double a, TailMethod method,
                                     std::size_t m, double k, std::uint64_t seed,
                                     unsigned threads = 0);

}  // namespace smoothq

#endif  // SMOOTHQ_RISK_HPP

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

#include "smoothq/risk.hpp"

#include <cmath>
#include <stdexcept>

#include "replicate_engine.hpp"
#include "smoothq/asymptotics.hpp"
#include "smoothq/smoothing.hpp"

namespace smoothq {

namespace {

// Data analyses run on the observed-support design: unobserved window values
// carry no mass and are excluded from the kernel dimension d.
constexpr SupportPolicy kRiskPolicy = SupportPolicy::observed_values;

double continuity_corrected(double a) {
  return a == std::floor(a) ? a + 0.5 : a;
}

}  // namespace

std::array<double, 5> c5ns_levels(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("c5ns: p must lie in (0, 1)");
  return {0.90 * p + 0.10, 0.75 * p + 0.25, 0.50 * p + 0.50, 0.25 * p + 0.75, 0.10 * p + 0.90};
}

long long var_classical(const DiscreteSample& sample, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("var: p must lie in (0, 1)");
  for (std::size_t i = 0; i < sample.values().size(); ++i) {
    if (sample.ecdf(static_cast<double>(sample.values()[i])) >= p) return sample.values()[i];
  }
  return sample.max_value();
}

C5nsResult c5ns_summary(const DiscreteSample& sample, double p, double k, double confidence) {
  const std::array<double, 5> levels = c5ns_levels(p);
  const TruncationDesign design = empirical_design(sample, k, kRiskPolicy);

  // levels refer to the full distribution; translate them onto the
  // truncated scale before smoothing
  std::array<double, 5> mapped{};
  for (std::size_t i = 0; i < 5; ++i) mapped[i] = level_from_global(design, levels[i]);

  const QuantileCovariance qc = quantile_covariance(design, mapped, sample.size());
  const auto intervals = normal_ci(qc, confidence);

  C5nsResult result;
  result.p = p;
  result.confidence = confidence;
  result.levels = levels;
  for (std::size_t i = 0; i < 5; ++i) {
    result.quantiles[i] = qc.estimates[i];
    result.intervals[i] = intervals[i];
  }
  result.var_smoothed = smoothed_quantile(design, level_from_global(design, p));
  result.var_classical = var_classical(sample, p);
  return result;
}

double smoothed_tail_prob(const TruncationDesign& design, double a) {
  const double target = continuity_corrected(a);
  constexpr double kLo = 1e-9;
  constexpr double kHi = 1.0 - 1e-9;
  constexpr double kTol = 1e-12;
  constexpr int kMaxIter = 200;

  // The quantile function is continuous and nondecreasing, so bisection on
  // the predicate Q(u) >= target finds the smallest level attaining the
  // threshold; plateaus resolve to their left edge.
  if (smoothed_quantile(design, kHi) < target) {
    return 1.0 - design.cdf_at_upper;  // threshold above the window
  }
  if (smoothed_quantile(design, kLo) >= target) {
    return 1.0 - design.cdf_at_lower;  // threshold below the window
  }
  double lo = kLo;
  double hi = kHi;
  for (int it = 0; it < kMaxIter && hi - lo > kTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (smoothed_quantile(design, mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 1.0 - map_truncated_level(design, hi);
}

double smoothed_tail_prob(const DiscreteSample& sample, double k, double a) {
  return smoothed_tail_prob(empirical_design(sample, k, kRiskPolicy), a);
}

double interpolated_tail_prob(const DiscreteSample& sample, double a) {
  const auto tail = [&sample](double t) {
    return static_cast<double>(sample.count_above(t)) / static_cast<double>(sample.size());
  };
  if (a == std::floor(a)) return tail(a);
  const double base = std::floor(a);
  const double frac = a - base;
  return (1.0 - frac) * tail(base) + frac * tail(base + 1.0);
}

TailProbEstimate tail_prob_bootstrap(const DiscreteSample& sample, double a, TailMethod method,
                                     std::size_t m, double k, std::uint64_t seed,
                                     unsigned threads) {
  if (m < 2) throw std::domain_error("tail bootstrap: m must be at least 2");
  if (method == TailMethod::smoothed) {
    (void)empirical_design(sample, k, kRiskPolicy);  // reject bad inputs up front
  } else {
    (void)sample.moments();
  }

  TailProbEstimate estimate;
  estimate.threshold = a;
  estimate.corrected_threshold =
      method == TailMethod::smoothed ? continuity_corrected(a) : a;
  estimate.method = method;

  std::size_t skipped = 0;
  const Matrix rows = detail::run_replicates(
      m, 1, seed, threads, skipped, [&](std::size_t /*idx*/, Rng& rng, double* row) {
        return detail::resampled_estimate(sample, rng, [&](const DiscreteSample& resample) {
          row[0] = method == TailMethod::smoothed ? smoothed_tail_prob(resample, k, a)
                                                  : interpolated_tail_prob(resample, a);
        });
      });

  std::vector<double> means;
  Matrix cov;
  detail::column_stats(rows, means, cov);
  estimate.mean = means[0];
  estimate.sd = std::sqrt(cov(0, 0));
  if (estimate.mean > 0.0) estimate.cv = estimate.sd / estimate.mean;
  return estimate;
}

}  // namespace smoothq

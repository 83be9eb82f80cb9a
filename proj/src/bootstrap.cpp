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

#include "smoothq/bootstrap.hpp"

#include <stdexcept>

#include "replicate_engine.hpp"
#include "smoothq/smoothing.hpp"

namespace smoothq {

BootstrapSummary bootstrap_quantiles(const DiscreteSample& sample, std::size_t m, double k,
                                     std::span<const double> levels, std::uint64_t seed,
                                     unsigned threads, SupportPolicy policy) {
  if (m < 2) throw std::domain_error("bootstrap: m must be at least 2");
  if (levels.empty()) throw std::domain_error("bootstrap: no levels given");
  for (double u : levels) {
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("bootstrap: level outside (0, 1)");
  }
  // fail fast on inputs that would reject every resample
  (void)empirical_design(sample, k, policy);

  const std::size_t l = levels.size();
  BootstrapSummary summary;
  summary.levels.assign(levels.begin(), levels.end());
  summary.m = m;
  summary.seed = seed;

  summary.replicates = detail::run_replicates(
      m, l, seed, threads, summary.skipped,
      [&](std::size_t /*idx*/, Rng& rng, double* row) {
        return detail::resampled_estimate(sample, rng, [&](const DiscreteSample& resample) {
          const TruncationDesign design = empirical_design(resample, k, policy);
          for (std::size_t c = 0; c < l; ++c) {
            row[c] = smoothed_quantile(design, levels[c]);
          }
        });
      });

  detail::column_stats(summary.replicates, summary.col_means, summary.cov);
  return summary;
}

}  // namespace smoothq

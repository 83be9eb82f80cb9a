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

#ifndef SMOOTHQ_BOOTSTRAP_HPP
#define SMOOTHQ_BOOTSTRAP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "smoothq/discrete_sample.hpp"
#include "smoothq/matrix.hpp"
#include "smoothq/truncation.hpp"

namespace smoothq {

struct BootstrapSummary {
  std::vector<double> levels;
  Matrix replicates;              // m x l smoothed quantile estimates
  std::vector<double> col_means;  // per-level replicate means
  Matrix cov;                     // l x l, m-1 divisor
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::size_t skipped = 0;  // degenerate resamples that were redrawn
};

/// Resamples the data with replacement m times; each replicate rebuilds the
/// truncation design from its own moments and evaluates the smoothed
/// quantiles at the given levels. Replicates run on any number of workers
/// and reduce in index order, so a (seed, m, n) triple yields bit-identical
/// summaries regardless of thread count. Degenerate resamples are redrawn;
/// more than 1% of them aborts the run.
BootstrapSummary bootstrap_quantiles(const DiscreteSample& sample, std::size_t m, double k,
                                     std::span<const double> levels, std::uint64_t seed,
                                     unsigned threads = 0,
                                     SupportPolicy policy = SupportPolicy::window_integers);

}  // namespace smoothq

#endif  // SMOOTHQ_BOOTSTRAP_HPP

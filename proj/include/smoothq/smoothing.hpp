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

#ifndef SMOOTHQ_SMOOTHING_HPP
#define SMOOTHQ_SMOOTHING_HPP

#include <vector>

#include "smoothq/truncation.hpp"

namespace smoothq {

/// Beta-kernel weights over the design's support at level u in (0, 1):
/// weight_j = B(f_star[j]) - B(f_star[j-1]) with shape parameters
/// (d+1)u and (d+1)(1-u). Nonnegative, sum to one.
std::vector<double> smoothing_weights(const TruncationDesign& design, double u);

/// Weighted support average; the smoothed u-th quantile of the truncated
/// law. Nondecreasing in u and confined to [support.front(), support.back()].
double smoothed_quantile(const TruncationDesign& design, double u);

/// Affine map from a truncated-scale level to the level of the untruncated
/// law: cdf_at_lower + u * (cdf_at_upper - cdf_at_lower).
double map_truncated_level(const TruncationDesign& design, double u);

/// Inverse of map_truncated_level; p must lie strictly between the window's
/// CDF values.
double level_from_global(const TruncationDesign& design, double p);

}  // namespace smoothq

#endif  // SMOOTHQ_SMOOTHING_HPP

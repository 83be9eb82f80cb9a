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

#ifndef SMOOTHQ_ASYMPTOTICS_HPP
#define SMOOTHQ_ASYMPTOTICS_HPP

#include <span>
#include <utility>
#include <vector>

#include "smoothq/matrix.hpp"
#include "smoothq/truncation.hpp"

namespace smoothq {

/// Smoothed quantile estimates at a set of levels together with their
/// asymptotic covariance (already divided by the sample size).
struct QuantileCovariance {
  std::vector<double> levels;
  std::vector<double> estimates;
  Matrix sigma;  // l x l, symmetric PSD up to round-off
  std::size_t n = 0;
};

/// Plug-in asymptotic covariance of the smoothed quantile vector.
///
/// D is the (d-1)x(d-1) matrix with entries F*_min(i,j) (1 - F*_max(i,j));
/// H is l x (d-1) with h_ij = (y_j - y_{j+1}) * beta_pdf(f_star[j]) under the
/// level-i kernel. sigma = H D H' / n. Support points whose truncated CDF
/// value sits at 0 or 1 carry no sampling variance and contribute zero
/// columns, which also keeps the beta density away from its boundary
/// singularities.
QuantileCovariance quantile_covariance(const TruncationDesign& design,
                                       std::span<const double> levels, std::size_t n);

/// Pointwise normal-theory intervals: estimate_i +/- z * sqrt(sigma_ii).
/// A diagonal entry below -1e-10 is rejected; smaller negatives are rounded
/// up to zero.
std::vector<std::pair<double, double>> normal_ci(const QuantileCovariance& qc,
                                                 double confidence);

}  // namespace smoothq

#endif  // SMOOTHQ_ASYMPTOTICS_HPP

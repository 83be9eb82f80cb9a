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

#include "smoothq/smoothing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "smoothq/special.hpp"

namespace smoothq {

namespace {

void check_level(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("level u must lie in (0, 1), got " + std::to_string(u));
  }
}

void check_design(const TruncationDesign& design) {
  if (design.d() < 2) throw std::domain_error("design must hold at least two support points");
}

}  // namespace

std::vector<double> smoothing_weights(const TruncationDesign& design, double u) {
  check_level(u);
  check_design(design);
  const double d = static_cast<double>(design.d());
  const BetaParams kernel{(d + 1.0) * u, (d + 1.0) * (1.0 - u)};

  std::vector<double> weights(design.support.size());
  double prev = 0.0;  // kernel CDF at the implicit predecessor value 0
  double sum = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double cur = beta_cdf(design.f_star[j], kernel);
    double w = cur - prev;
    if (w < 0.0) w = 0.0;  // equal or adjacent f_star values can round below zero
    weights[j] = w;
    sum += w;
    prev = cur;
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw std::runtime_error("smoothing weights lost normalization: sum = " +
                             std::to_string(sum));
  }
  for (double& w : weights) {
    if (w < 1e-300) w = 0.0;  // keep denormals out of the dot products
  }
  return weights;
}

double smoothed_quantile(const TruncationDesign& design, double u) {
  const std::vector<double> weights = smoothing_weights(design, u);
  long double acc = 0.0L;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    acc += static_cast<long double>(weights[j]) * design.support[j];
  }
  return static_cast<double>(acc);
}

double map_truncated_level(const TruncationDesign& design, double u) {
  check_level(u);
  return design.cdf_at_lower + u * (design.cdf_at_upper - design.cdf_at_lower);
}

double level_from_global(const TruncationDesign& design, double p) {
  if (!(p > design.cdf_at_lower && p < design.cdf_at_upper)) {
    throw std::domain_error("global level " + std::to_string(p) +
                            " falls outside the truncation window's CDF range");
  }
  return (p - design.cdf_at_lower) / (design.cdf_at_upper - design.cdf_at_lower);
}

}  // namespace smoothq

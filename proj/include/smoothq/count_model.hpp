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

#ifndef SMOOTHQ_COUNT_MODEL_HPP
#define SMOOTHQ_COUNT_MODEL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smoothq/discrete_sample.hpp"
#include "smoothq/rng.hpp"

namespace smoothq {

enum class ModelKind { poisson, negative_binomial, zip, zinb };

struct ModelMoments {
  double mean;
  double variance;
  double regular_zero_prop;  // zeros produced by the base count model
  double excess_zero_prop;   // structural zeros of a zero-inflated model
};

/// Parametric claim-count model: Poisson(lambda), NB(r, beta) with mean
/// r*beta and variance r*beta*(1+beta), or a zero-inflated version carrying
/// total zero mass c. Immutable after construction; the CDF prefix table is
/// built eagerly so lookups are safe from any thread.
class CountModel {
 public:
  static CountModel poisson(double lambda);
  static CountModel negative_binomial(double r, double beta);
  static CountModel zip(double lambda, double c);
  static CountModel zinb(double r, double beta, double c);

  /// Parse CLI-style model specs: `poisson:lambda=9`, `nb:r=9,beta=1`,
  /// `zip:lambda=1,c=0.8`, `zinb:r=1,beta=1,c=0.8`.
  static CountModel parse(std::string_view spec);

  ModelKind kind() const { return kind_; }
  bool zero_inflated() const { return kind_ == ModelKind::zip || kind_ == ModelKind::zinb; }
  std::string spec_string() const;

  double pmf(long long y) const;

  /// P(Y <= t) for any real t (right-continuous step function, zero below 0).
  double cdf(double t) const;

  ModelMoments moments() const;

  /// One draw. Zero-inflated kinds use the two-step scheme: a structural
  /// zero with probability (c - p0)/(1 - p0), otherwise a base-model draw.
  long long draw(Rng& rng) const;

  DiscreteSample sample(std::size_t n, Rng& rng) const;

 private:
  CountModel(ModelKind kind, double a, double b, double c);

  double base_pmf(long long y) const;
  double base_zero_prob() const;
  long long draw_base(Rng& rng) const;
  void build_cdf_table();

  ModelKind kind_;
  double lambda_ = 0.0;  // poisson / zip rate
  double r_ = 0.0;       // nb / zinb size
  double beta_ = 0.0;    // nb / zinb scale
  double c_ = 0.0;       // total zero proportion for zero-inflated kinds
  double structural_zero_prob_ = 0.0;
  std::vector<double> cdf_table_;  // cdf_table_[y] = P(Y <= y)
};

}  // namespace smoothq

#endif  // SMOOTHQ_COUNT_MODEL_HPP

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

#ifndef SMOOTHQ_SIM_HARNESS_HPP
#define SMOOTHQ_SIM_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smoothq/count_model.hpp"
#include "smoothq/matrix.hpp"

namespace smoothq {

enum class StudyMode { simulate, bootstrap_validate, theoretical };

StudyMode parse_study_mode(const std::string& text);
std::string study_mode_name(StudyMode mode);

struct StudyConfig {
  CountModel model;
  double k = 0.0;
  std::size_t n = 0;           // sample size per replicate
  std::size_t reps = 0;        // replicates, or bootstrap resamples in
                               // bootstrap-validate mode
  std::vector<double> levels;  // quantile levels
  std::uint64_t seed = 0;
  StudyMode mode = StudyMode::simulate;
  unsigned threads = 0;
};

struct StudyReport {
  StudyMode mode = StudyMode::theoretical;
  std::string model_spec;
  double k = 0.0;
  std::size_t n = 0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  std::vector<double> levels;
  std::vector<double> means;
  std::optional<Matrix> ncov;  // covariance of the estimates scaled by n
  std::vector<double> se_means;
  std::size_t skipped = 0;
  // bootstrap-validate carries the generated sample's summary
  std::optional<double> sample_mean;
  std::optional<double> sample_sd;
};

/// Monte Carlo study driver.
///
/// simulate: reps independent samples of size n, smoothed quantiles per
/// sample (window-support designs built from each sample's moments),
/// reduced to means and the n-scaled covariance.
///
/// bootstrap-validate: one generated sample of size n, then `reps`
/// bootstrap resamples of it.
///
/// theoretical: the exact targets — population design from closed-form
/// moments, smoothed quantiles and the asymptotic covariance (reported
/// n-scaled, i.e. the plain H D H' matrix).
StudyReport run_study(const StudyConfig& config);

}  // namespace smoothq

#endif  // SMOOTHQ_SIM_HARNESS_HPP

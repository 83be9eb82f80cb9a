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

#include "smoothq/sim_harness.hpp"

#include <cmath>
#include <stdexcept>

#include "replicate_engine.hpp"
#include "smoothq/asymptotics.hpp"
#include "smoothq/bootstrap.hpp"
#include "smoothq/smoothing.hpp"

namespace smoothq {

StudyMode parse_study_mode(const std::string& text) {
  if (text == "simulate") return StudyMode::simulate;
  if (text == "bootstrap-validate") return StudyMode::bootstrap_validate;
  if (text == "theoretical") return StudyMode::theoretical;
  throw std::invalid_argument("mode: expected simulate|bootstrap-validate|theoretical, got `" +
                              text + "`");
}

std::string study_mode_name(StudyMode mode) {
  switch (mode) {
    case StudyMode::simulate:
      return "simulate";
    case StudyMode::bootstrap_validate:
      return "bootstrap-validate";
    case StudyMode::theoretical:
      return "theoretical";
  }
  return "?";
}

namespace {

void check_config(const StudyConfig& config) {
  if (config.levels.empty()) throw std::domain_error("study: no levels given");
  for (double u : config.levels) {
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("study: level outside (0, 1)");
  }
  if (config.mode != StudyMode::theoretical) {
    if (config.reps < 1) throw std::domain_error("study: reps must be positive");
    if (config.n < 2) throw std::domain_error("study: n must be at least 2");
  }
}

StudyReport base_report(const StudyConfig& config) {
  StudyReport report;
  report.mode = config.mode;
  report.model_spec = config.model.spec_string();
  report.k = config.k;
  report.n = config.n;
  report.reps = config.reps;
  report.seed = config.seed;
  report.levels = config.levels;
  return report;
}

StudyReport run_theoretical(const StudyConfig& config) {
  StudyReport report = base_report(config);
  const TruncationDesign design = population_design(config.model, config.k);
  // n = 1 leaves the covariance unscaled, which is exactly the n-scaled form
  const QuantileCovariance qc = quantile_covariance(design, config.levels, 1);
  report.means = qc.estimates;
  report.ncov = qc.sigma;
  return report;
}

StudyReport run_simulate(const StudyConfig& config) {
  StudyReport report = base_report(config);
  const std::size_t l = config.levels.size();

  const Matrix estimates = detail::run_replicates(
      config.reps, l, config.seed, config.threads, report.skipped,
      [&](std::size_t /*idx*/, Rng& rng, double* row) {
        constexpr int kMaxAttempts = 100;
        std::size_t redraws = 0;
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
          const DiscreteSample sample = config.model.sample(config.n, rng);
          if (sample.values().size() < 2) {
            ++redraws;
            continue;
          }
          try {
            const TruncationDesign design = empirical_design(sample, config.k);
            for (std::size_t c = 0; c < l; ++c) {
              row[c] = smoothed_quantile(design, config.levels[c]);
            }
            return redraws;
          } catch (const std::domain_error&) {
            ++redraws;
          }
        }
        throw std::runtime_error("study: a replicate kept producing degenerate samples");
      });

  std::vector<double> means;
  Matrix cov;
  detail::column_stats(estimates, means, cov);
  report.means = means;
  if (config.reps >= 2) {
    Matrix ncov(l, l);
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t b = 0; b < l; ++b)
        ncov(a, b) = cov(a, b) * static_cast<double>(config.n);
    report.ncov = ncov;
    report.se_means.resize(l);
    for (std::size_t c = 0; c < l; ++c) {
      report.se_means[c] = std::sqrt(cov(c, c) / static_cast<double>(config.reps));
    }
  }
  return report;
}

StudyReport run_bootstrap_validate(const StudyConfig& config) {
  StudyReport report = base_report(config);
  // stream 0 generates the sample; the resampling engine gets its own master
  Rng rng = make_stream(config.seed, 0);
  const DiscreteSample sample = config.model.sample(config.n, rng);
  const SampleMoments moments = sample.moments();
  report.sample_mean = moments.mean;
  report.sample_sd = moments.sd;

  const BootstrapSummary summary =
      bootstrap_quantiles(sample, config.reps, config.k, config.levels,
                          stream_seed(config.seed, 1), config.threads);
  report.means = summary.col_means;
  report.skipped = summary.skipped;
  const std::size_t l = config.levels.size();
  Matrix ncov(l, l);
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = 0; b < l; ++b)
      ncov(a, b) = summary.cov(a, b) * static_cast<double>(config.n);
  report.ncov = ncov;
  return report;
}

}  // namespace

StudyReport run_study(const StudyConfig& config) {
  check_config(config);
  switch (config.mode) {
    case StudyMode::theoretical:
      return run_theoretical(config);
    case StudyMode::simulate:
      return run_simulate(config);
    case StudyMode::bootstrap_validate:
      return run_bootstrap_validate(config);
  }
  throw std::logic_error("study: unknown mode");
}

}  // namespace smoothq

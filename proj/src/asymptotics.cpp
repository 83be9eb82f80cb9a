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

#include "smoothq/asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "smoothq/smoothing.hpp"
#include "smoothq/special.hpp"

namespace smoothq {

QuantileCovariance quantile_covariance(const TruncationDesign& design,
                                       std::span<const double> levels, std::size_t n) {
  if (design.d() < 2) throw std::domain_error("quantile_covariance: design needs d >= 2");
  if (n < 1) throw std::domain_error("quantile_covariance: n must be positive");
  if (levels.empty()) throw std::domain_error("quantile_covariance: no levels given");

  const std::size_t l = levels.size();
  const std::size_t dm1 = design.support.size() - 1;
  const double d = static_cast<double>(design.d());

  Matrix h(l, dm1);
  for (std::size_t i = 0; i < l; ++i) {
    const double u = levels[i];
    if (!(u > 0.0 && u < 1.0)) {
      throw std::domain_error("quantile_covariance: level outside (0, 1)");
    }
    const BetaParams kernel{(d + 1.0) * u, (d + 1.0) * (1.0 - u)};
    for (std::size_t j = 0; j < dm1; ++j) {
      const double f = design.f_star[j];
      if (f <= 0.0 || f >= 1.0) {
        h(i, j) = 0.0;  // zero-variance component
      } else {
        h(i, j) = static_cast<double>(design.support[j] - design.support[j + 1]) *
                  beta_pdf(f, kernel);
      }
    }
  }

  // sigma = H D H' / n with d_jm = F*_min(j,m) (1 - F*_max(j,m)).
  QuantileCovariance qc;
  qc.levels.assign(levels.begin(), levels.end());
  qc.n = n;
  qc.sigma = Matrix(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t i2 = i; i2 < l; ++i2) {
      long double acc = 0.0L;
      for (std::size_t j = 0; j < dm1; ++j) {
        if (h(i, j) == 0.0) continue;
        const double fj = design.f_star[j];
        long double row = 0.0L;
        for (std::size_t m = 0; m < dm1; ++m) {
          const double fm = design.f_star[m];
          const double djm = (fj < fm ? fj : fm) * (1.0 - (fj > fm ? fj : fm));
          row += static_cast<long double>(djm) * h(i2, m);
        }
        acc += h(i, j) * row;
      }
      const double value = static_cast<double>(acc / static_cast<long double>(n));
      qc.sigma(i, i2) = value;
      qc.sigma(i2, i) = value;
    }
  }

  qc.estimates.reserve(l);
  for (double u : levels) qc.estimates.push_back(smoothed_quantile(design, u));
  return qc;
}

std::vector<std::pair<double, double>> normal_ci(const QuantileCovariance& qc,
                                                 double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::domain_error("normal_ci: confidence must lie in (0, 1)");
  }
  const double z = normal_quantile(0.5 * (1.0 + confidence));
  std::vector<std::pair<double, double>> intervals;
  intervals.reserve(qc.levels.size());
  for (std::size_t i = 0; i < qc.levels.size(); ++i) {
    double variance = qc.sigma(i, i);
    if (variance < -1e-10) {
      throw std::domain_error("normal_ci: covariance diagonal is negative: " +
                              std::to_string(variance));
    }
    if (variance < 0.0) variance = 0.0;
    const double half = z * std::sqrt(variance);
    intervals.emplace_back(qc.estimates[i] - half, qc.estimates[i] + half);
  }
  return intervals;
}

}  // namespace smoothq

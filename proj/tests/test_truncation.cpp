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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "smoothq/fixtures.hpp"
#include "smoothq/truncation.hpp"

using namespace smoothq;

namespace {
constexpr double kPi = std::numbers::pi;
const double kPi3 = kPi * kPi * kPi;
}  // namespace

TEST_CASE("population window for a moderate-rate model") {
  const TruncationDesign design = population_design(CountModel::poisson(9.0), kPi);
  // mean 9, sd 3: the window is 9 +/- 3*pi and misses the clamp
  CHECK(design.lower == doctest::Approx(9.0 - 3.0 * kPi).epsilon(1e-15));
  CHECK(design.upper == doctest::Approx(9.0 + 3.0 * kPi).epsilon(1e-15));
  CHECK(design.support.front() == 0);
  CHECK(design.support.back() == 18);
  CHECK(design.d() == 19);
  CHECK(design.cdf_at_lower == 0.0);
  CHECK(design.f_star.back() == 1.0);
  CHECK(design.f_star.front() > 0.0);
  for (std::size_t j = 1; j < design.f_star.size(); ++j) {
    CHECK(design.f_star[j] >= design.f_star[j - 1]);
  }
}

TEST_CASE("low-mean models clamp the lower cut") {
  const TruncationDesign design = population_design(CountModel::zip(1.0, 0.8), kPi);
  CHECK(design.lower == -0.5);
  CHECK(design.support.front() == 0);
}

TEST_CASE("a model with all its mass inside the window spans the full CDF") {
  const TruncationDesign design = population_design(CountModel::poisson(9.0), kPi3);
  CHECK(design.cdf_at_lower == 0.0);
  CHECK(design.cdf_at_upper == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("empirical window design follows the resampling construction") {
  const TruncationDesign design = empirical_design(fixture("O"), kPi3);
  CHECK(design.lower == -0.5);
  CHECK(design.upper == doctest::Approx(16.88).epsilon(0.01));
  CHECK(design.support.front() == 0);
  CHECK(design.support.back() == 16);  // floor of the upper cut
  CHECK(design.d() == 17);
  CHECK(design.cdf_at_lower == 0.0);
  CHECK(design.cdf_at_upper == 1.0);
  CHECK(design.f_star.back() == 1.0);
}

TEST_CASE("observed-support policy keeps only the distinct data values") {
  const TruncationDesign design =
      empirical_design(fixture("O"), kPi3, SupportPolicy::observed_values);
  CHECK(design.support == std::vector<long long>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(design.d() == 8);
  CHECK(design.f_star.back() == 1.0);
  // interior truncated CDF values strictly inside (0, 1)
  for (int j = 0; j + 1 < design.d(); ++j) {
    CHECK(design.f_star[j] > 0.0);
    CHECK(design.f_star[j] < 1.0);
  }
}

TEST_CASE("two-point sample designs") {
  std::vector<std::pair<long long, long long>> rows = {{0, 50}, {1, 50}};
  const DiscreteSample sample = DiscreteSample::from_counts(rows);
  const TruncationDesign design = empirical_design(sample, kPi);
  CHECK(design.f_star.back() == 1.0);
  // all mass sits at {0, 1}; the truncated CDF saturates at value 1 even
  // though the window stretches further
  REQUIRE(design.support.size() >= 2);
  CHECK(design.support[1] == 1);
  CHECK(design.f_star[1] == 1.0);
  CHECK(design.cdf_at_lower == 0.0);
  CHECK(design.cdf_at_upper == 1.0);
}

TEST_CASE("degenerate and empty-window inputs are rejected") {
  const std::vector<long long> constant = {2, 2, 2, 2};
  CHECK_THROWS_AS(empirical_design(DiscreteSample::from_values(constant), kPi),
                  std::domain_error);

  // window squeezed between two integers: no support points
  std::vector<std::pair<long long, long long>> rows = {{0, 50}, {1, 50}};
  const DiscreteSample sample = DiscreteSample::from_counts(rows);
  CHECK_THROWS_AS(empirical_design(sample, 0.001), std::domain_error);

  // window strictly inside a data gap: support points but no mass
  std::vector<std::pair<long long, long long>> gap = {{0, 5}, {10, 5}};
  const DiscreteSample gap_sample = DiscreteSample::from_counts(gap);
  CHECK_THROWS_AS(empirical_design(gap_sample, 0.36), std::domain_error);

  CHECK_THROWS_AS(population_design(CountModel::poisson(9.0), -1.0), std::domain_error);
}

TEST_CASE("integer cuts are refused, not nudged") {
  // sd = 3 exactly, so k = 1/3 puts the lower cut on the integer 8
  CHECK_THROWS_AS(population_design(CountModel::poisson(9.0), 1.0 / 3.0), std::domain_error);
  CHECK_THROWS_WITH_AS(population_design(CountModel::poisson(9.0), 1.0 / 3.0),
                       doctest::Contains("irrational"), std::domain_error);
}

TEST_CASE("coverage bounds reproduce the reference values") {
  auto round3 = [](double x) { return std::round(x * 1000.0) / 1000.0; };
  CHECK(round3(coverage_bound(5.0, 10)) == 0.909);
  CHECK(round3(coverage_bound(5.0, 50)) == 0.941);
  CHECK(round3(coverage_bound(5.0, 100)) == 0.950);
  CHECK(round3(coverage_bound(5.0)) == 0.960);
  CHECK(round3(coverage_bound(kPi)) == 0.899);
  CHECK(round3(coverage_bound(kPi * kPi)) == 0.990);
  CHECK(round3(coverage_bound(kPi3)) == 0.999);
  CHECK_THROWS_AS(coverage_bound(1.0), std::domain_error);
  CHECK_THROWS_AS(coverage_bound(5.0, 0), std::domain_error);
}

TEST_CASE("finite-n coverage bound survives float rounding at exact integers") {
  // (n+1)/n * ((n-1)/k^2 + 1) = 2 exactly for k = 3, n = 8
  CHECK(coverage_bound(3.0, 8) == doctest::Approx(1.0 - 2.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("k parsing") {
  CHECK(parse_k("pi") == kPi);
  CHECK(parse_k("pi2") == kPi * kPi);
  CHECK(parse_k("pi3") == kPi3);
  CHECK(parse_k("5.25") == 5.25);
  CHECK_THROWS_AS(parse_k("tau"), std::invalid_argument);
  CHECK_THROWS_AS(parse_k("3abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_k("-2"), std::domain_error);
  CHECK_THROWS_AS(parse_k("0"), std::domain_error);
}

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

#include "oracles.hpp"
#include "smoothq/count_model.hpp"

using namespace smoothq;

namespace {

const CountModel& study_models(int i) {
  static const CountModel models[4] = {
      CountModel::poisson(9.0),
      CountModel::negative_binomial(9.0, 1.0),
      CountModel::zip(1.0, 0.8),
      CountModel::zinb(1.0, 1.0, 0.8),
  };
  return models[i];
}

}  // namespace

TEST_CASE("pmf closed-form spot values") {
  CHECK(study_models(0).pmf(0) == doctest::Approx(std::exp(-9.0)).epsilon(1e-14));
  CHECK(study_models(1).pmf(0) == doctest::Approx(0.001953125).epsilon(1e-13));  // 2^-9
  CHECK(study_models(2).pmf(0) == 0.8);
  CHECK(study_models(3).pmf(0) == 0.8);
  // positive part of a zero-inflated pmf is the scaled base pmf
  const double keep = 0.2 / (1.0 - std::exp(-1.0));
  CHECK(study_models(2).pmf(3) ==
        doctest::Approx(keep * std::exp(-1.0) / 6.0).epsilon(1e-13));
  CHECK_THROWS_AS(study_models(0).pmf(-1), std::domain_error);
}

TEST_CASE("pmf sums to one over the support") {
  for (int i = 0; i < 4; ++i) {
    const CountModel& model = study_models(i);
    long double sum = 0.0L;
    for (long long y = 0; y < 400; ++y) sum += model.pmf(y);
    CHECK(std::fabs(static_cast<double>(sum) - 1.0) < 1e-12);
  }
}

TEST_CASE("cdf is a right-continuous step function from zero") {
  const CountModel& poisson = study_models(0);
  CHECK(poisson.cdf(-0.42) == 0.0);
  CHECK(poisson.cdf(-1000.0) == 0.0);
  CHECK(study_models(2).cdf(0.5) == 0.8);
  CHECK(poisson.cdf(0.0) == doctest::Approx(std::exp(-9.0)).epsilon(1e-13));
  CHECK(poisson.cdf(0.999) == poisson.cdf(0.0));

  // high-precision summation oracle at the window edge used throughout
  CHECK(poisson.cdf(18.4248) ==
        doctest::Approx(oracles::poisson_cdf_oracle(9.0, 18.4248)).epsilon(1e-13));
  CHECK(study_models(1).cdf(25.7) ==
        doctest::Approx(oracles::nb_cdf_oracle(9.0, 1.0, 25.7)).epsilon(1e-13));
}

TEST_CASE("cdf reaches one in the far tail") {
  for (int i = 0; i < 4; ++i) {
    const CountModel& model = study_models(i);
    double prev = -1.0;
    for (double t : {-0.5, 0.3, 1.7, 5.2, 10.9, 30.1, 80.7, 500.3}) {
      const double cur = model.cdf(t);
      CHECK(cur >= prev);
      prev = cur;
    }
    CHECK(model.cdf(1e6) >= 1.0 - 1e-12);
  }
}

TEST_CASE("moments match the closed forms") {
  const ModelMoments poisson = study_models(0).moments();
  CHECK(poisson.mean == 9.0);
  CHECK(poisson.variance == 9.0);
  CHECK(poisson.regular_zero_prop == doctest::Approx(std::exp(-9.0)).epsilon(1e-14));
  CHECK(poisson.excess_zero_prop == 0.0);

  const ModelMoments nb = study_models(1).moments();
  CHECK(nb.mean == 9.0);
  CHECK(nb.variance == 18.0);
  CHECK(nb.regular_zero_prop == doctest::Approx(0.001953125).epsilon(1e-13));
  CHECK(nb.excess_zero_prop == 0.0);

  const ModelMoments zip = study_models(2).moments();
  CHECK(zip.mean == doctest::Approx(0.316395341373865285).epsilon(1e-14));
  CHECK(zip.variance == doctest::Approx(0.53268467070464582).epsilon(1e-14));
  CHECK(zip.regular_zero_prop == doctest::Approx(0.116395341373865285).epsilon(1e-14));
  CHECK(zip.excess_zero_prop == doctest::Approx(0.683604658626134715).epsilon(1e-14));
  // rounded values quoted for this parameter set
  CHECK(std::fabs(zip.mean - 0.32) < 0.005);
  CHECK(std::fabs(zip.variance - 0.53) < 0.005);

  const ModelMoments zinb = study_models(3).moments();
  CHECK(zinb.mean == doctest::Approx(0.40).epsilon(1e-13));
  CHECK(zinb.variance == doctest::Approx(1.04).epsilon(1e-13));
  CHECK(zinb.regular_zero_prop == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(zinb.excess_zero_prop == doctest::Approx(0.6).epsilon(1e-13));
}

TEST_CASE("zero proportions decompose the total zero mass") {
  for (int i = 0; i < 4; ++i) {
    const CountModel& model = study_models(i);
    const ModelMoments m = model.moments();
    CHECK(m.regular_zero_prop + m.excess_zero_prop ==
          doctest::Approx(model.pmf(0)).epsilon(1e-13));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(CountModel::poisson(-1.0), std::domain_error);
  CHECK_THROWS_AS(CountModel::poisson(0.0), std::domain_error);
  CHECK_THROWS_AS(CountModel::negative_binomial(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(CountModel::zip(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(CountModel::zip(1.0, -0.1), std::domain_error);
  // total zero mass below the base zero probability is contradictory
  CHECK_THROWS_AS(CountModel::zinb(1.0, 1.0, 0.3), std::domain_error);
  CHECK_NOTHROW(CountModel::zinb(1.0, 1.0, 0.5));
}

TEST_CASE("model spec strings parse and round trip") {
  for (const char* spec : {"poisson:lambda=9", "nb:r=9,beta=1", "zip:lambda=1,c=0.8",
                           "zinb:r=1,beta=1,c=0.8"}) {
    const CountModel model = CountModel::parse(spec);
    const CountModel again = CountModel::parse(model.spec_string());
    CHECK(model.kind() == again.kind());
    CHECK(model.moments().mean == again.moments().mean);
  }
  CHECK_THROWS_AS(CountModel::parse("gamma:shape=2"), std::invalid_argument);
  CHECK_THROWS_AS(CountModel::parse("poisson"), std::invalid_argument);
  CHECK_THROWS_AS(CountModel::parse("poisson:lambda=abc"), std::invalid_argument);
  CHECK_THROWS_AS(CountModel::parse("poisson:lambda=9,c=0.5"), std::invalid_argument);
  CHECK_THROWS_AS(CountModel::parse("nb:r=9"), std::invalid_argument);
}

TEST_CASE("sampling hits the law-of-large-numbers targets") {
  const std::size_t n = 1'000'000;

  Rng rng1 = make_stream(2026, 0);
  const DiscreteSample zip = study_models(2).sample(n, rng1);
  const double zero_fraction = static_cast<double>(zip.counts().front()) / n;
  CHECK(zip.values().front() == 0);
  CHECK(std::fabs(zero_fraction - 0.8) < 0.002);

  Rng rng2 = make_stream(2026, 1);
  const DiscreteSample poisson = study_models(0).sample(n, rng2);
  CHECK(std::fabs(poisson.moments().mean - 9.0) < 0.01);

  Rng rng3 = make_stream(2026, 2);
  const DiscreteSample zinb = study_models(3).sample(n, rng3);
  const double sd = zinb.moments().sd;
  CHECK(std::fabs(sd * sd - 1.04) < 0.01);
}

TEST_CASE("sampling is deterministic for a given stream") {
  Rng a = make_stream(77, 3);
  Rng b = make_stream(77, 3);
  const DiscreteSample s1 = study_models(3).sample(5000, a);
  const DiscreteSample s2 = study_models(3).sample(5000, b);
  CHECK(s1.values() == s2.values());
  CHECK(s1.counts() == s2.counts());
}

TEST_CASE("sampler histograms pass a chi-square test against the pmf") {
  const std::size_t n = 100'000;
  for (int i = 0; i < 4; ++i) {
    const CountModel& model = study_models(i);
    Rng rng = make_stream(31337, static_cast<std::uint64_t>(i));
    const DiscreteSample sample = model.sample(n, rng);

    const long long top = sample.max_value();
    std::vector<double> observed(top + 2, 0.0);
    for (std::size_t j = 0; j < sample.values().size(); ++j) {
      observed[sample.values()[j]] = static_cast<double>(sample.counts()[j]);
    }
    std::vector<double> expected(top + 2, 0.0);
    double used = 0.0;
    for (long long y = 0; y <= top; ++y) {
      expected[y] = model.pmf(y) * n;
      used += model.pmf(y);
    }
    expected[top + 1] = (1.0 - used) * n;  // everything beyond the observed range

    const auto gof = oracles::chi_square_gof(observed, expected);
    INFO("model ", i, " chi2 = ", gof.statistic, " df = ", gof.df);
    CHECK(gof.statistic < oracles::chi2_crit_999(gof.df));
  }
}

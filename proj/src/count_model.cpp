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

#include "smoothq/count_model.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "smoothq/special.hpp"

namespace smoothq {

namespace {

constexpr double kCdfTailTol = 1e-14;
constexpr std::size_t kCdfTableCap = 1u << 23;  // guards runaway means

double uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

long long draw_poisson_inversion(double lambda, Rng& rng) {
  // Sequential-search inversion; exact for the moderate rates used here.
  const double u = uniform01(rng);
  double term = std::exp(-lambda);
  double cum = term;
  long long y = 0;
  while (u > cum && y < 1'000'000) {
    ++y;
    term *= lambda / static_cast<double>(y);
    cum += term;
  }
  return y;
}

}  // namespace

CountModel::CountModel(ModelKind kind, double a, double b, double c) : kind_(kind), c_(c) {
  switch (kind) {
    case ModelKind::poisson:
    case ModelKind::zip:
      lambda_ = a;
      if (!(lambda_ > 0.0) || !std::isfinite(lambda_)) {
        throw std::domain_error("count model: lambda must be positive");
      }
      break;
    case ModelKind::negative_binomial:
    case ModelKind::zinb:
      r_ = a;
      beta_ = b;
      if (!(r_ > 0.0) || !(beta_ > 0.0) || !std::isfinite(r_) || !std::isfinite(beta_)) {
        throw std::domain_error("count model: r and beta must be positive");
      }
      break;
  }
  if (zero_inflated()) {
    if (!(c_ >= 0.0 && c_ < 1.0)) {
      throw std::domain_error("count model: zero proportion c must lie in [0, 1)");
    }
    const double p0 = base_zero_prob();
    if (c_ < p0) {
      throw std::domain_error(
          "count model: c must not be below the base-model zero probability (excess-zero mass "
          "would be negative)");
    }
    structural_zero_prob_ = (c_ - p0) / (1.0 - p0);
  }
  build_cdf_table();
}

CountModel CountModel::poisson(double lambda) {
  return CountModel(ModelKind::poisson, lambda, 0.0, 0.0);
}
CountModel CountModel::negative_binomial(double r, double beta) {
  return CountModel(ModelKind::negative_binomial, r, beta, 0.0);
}
CountModel CountModel::zip(double lambda, double c) {
  return CountModel(ModelKind::zip, lambda, 0.0, c);
}
CountModel CountModel::zinb(double r, double beta, double c) {
  return CountModel(ModelKind::zinb, r, beta, c);
}

CountModel CountModel::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("model spec must look like `kind:param=value,...`");
  }
  const std::string kind(spec.substr(0, colon));
  std::map<std::string, double> params;
  std::stringstream rest{std::string(spec.substr(colon + 1))};
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("model spec: expected `param=value`, got `" + item + "`");
    }
    const std::string key = item.substr(0, eq);
    std::size_t pos = 0;
    double value = 0;
    try {
      value = std::stod(item.substr(eq + 1), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("model spec: bad number in `" + item + "`");
    }
    if (pos != item.size() - eq - 1) {
      throw std::invalid_argument("model spec: bad number in `" + item + "`");
    }
    if (!params.emplace(key, value).second) {
      throw std::invalid_argument("model spec: duplicate parameter `" + key + "`");
    }
  }
  auto take = [&params](const char* name) {
    auto it = params.find(name);
    if (it == params.end()) {
      throw std::invalid_argument(std::string("model spec: missing parameter `") + name + "`");
    }
    const double v = it->second;
    params.erase(it);
    return v;
  };
  CountModel model = [&]() {
    if (kind == "poisson") return poisson(take("lambda"));
    if (kind == "nb") {
      const double r = take("r");
      return negative_binomial(r, take("beta"));
    }
    if (kind == "zip") {
      const double lambda = take("lambda");
      return zip(lambda, take("c"));
    }
    if (kind == "zinb") {
      const double r = take("r");
      const double beta = take("beta");
      return zinb(r, beta, take("c"));
    }
    throw std::invalid_argument("model spec: unknown kind `" + kind +
                                "` (expected poisson|nb|zip|zinb)");
  }();
  if (!params.empty()) {
    throw std::invalid_argument("model spec: unexpected parameter `" + params.begin()->first +
                                "`");
  }
  return model;
}

std::string CountModel::spec_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind_) {
    case ModelKind::poisson:
      out << "poisson:lambda=" << lambda_;
      break;
    case ModelKind::negative_binomial:
      out << "nb:r=" << r_ << ",beta=" << beta_;
      break;
    case ModelKind::zip:
      out << "zip:lambda=" << lambda_ << ",c=" << c_;
      break;
    case ModelKind::zinb:
      out << "zinb:r=" << r_ << ",beta=" << beta_ << ",c=" << c_;
      break;
  }
  return out.str();
}

double CountModel::base_zero_prob() const {
  switch (kind_) {
    case ModelKind::poisson:
    case ModelKind::zip:
      return std::exp(-lambda_);
    default:
      return std::exp(-r_ * std::log1p(beta_));
  }
}

double CountModel::base_pmf(long long y) const {
  if (y < 0) return 0.0;
  const double yd = static_cast<double>(y);
  switch (kind_) {
    case ModelKind::poisson:
    case ModelKind::zip:
      return std::exp(yd * std::log(lambda_) - lambda_ - log_gamma(yd + 1.0));
    default:
      // NB with mean r*beta: P(y) = C(r+y-1, y) (1+beta)^-r (beta/(1+beta))^y
      return std::exp(log_gamma(r_ + yd) - log_gamma(r_) - log_gamma(yd + 1.0) -
                      r_ * std::log1p(beta_) + yd * (std::log(beta_) - std::log1p(beta_)));
  }
}

double CountModel::pmf(long long y) const {
  if (y < 0) throw std::domain_error("pmf: y must be a nonnegative integer");
  if (!zero_inflated()) return base_pmf(y);
  if (y == 0) return c_;
  return (1.0 - structural_zero_prob_) * base_pmf(y);
}

void CountModel::build_cdf_table() {
  long double cum = 0.0L;
  std::size_t y = 0;
  cdf_table_.reserve(64);
  while (true) {
    cum += pmf(static_cast<long long>(y));
    cdf_table_.push_back(static_cast<double>(cum > 1.0L ? 1.0L : cum));
    if (1.0L - cum <= kCdfTailTol) break;
    if (++y >= kCdfTableCap) {
      throw std::runtime_error("count model: cdf table exceeded capacity");
    }
  }
}

double CountModel::cdf(double t) const {
  if (t < 0.0) return 0.0;
  const double idx = std::floor(t);
  if (idx >= static_cast<double>(cdf_table_.size())) return cdf_table_.back();
  return cdf_table_[static_cast<std::size_t>(idx)];
}

ModelMoments CountModel::moments() const {
  double base_mean = 0.0, base_var = 0.0;
  switch (kind_) {
    case ModelKind::poisson:
    case ModelKind::zip:
      base_mean = lambda_;
      base_var = lambda_;
      break;
    default:
      base_mean = r_ * beta_;
      base_var = r_ * beta_ * (1.0 + beta_);
      break;
  }
  if (!zero_inflated()) {
    return ModelMoments{base_mean, base_var, base_zero_prob(), 0.0};
  }
  const double p0 = base_zero_prob();
  const double keep = (1.0 - c_) / (1.0 - p0);  // probability of a base-model draw
  const double mean = keep * base_mean;
  const double variance = keep * (base_var + base_mean * base_mean * (c_ - p0) / (1.0 - p0));
  return ModelMoments{mean, variance, p0 * (1.0 - c_) / (1.0 - p0), structural_zero_prob_};
}

long long CountModel::draw_base(Rng& rng) const {
  switch (kind_) {
    case ModelKind::poisson:
    case ModelKind::zip:
      return draw_poisson_inversion(lambda_, rng);
    default: {
      // Poisson rate mixed over a gamma draw.
      const double rate = std::gamma_distribution<double>(r_, beta_)(rng);
      if (rate <= 0.0) return 0;
      return draw_poisson_inversion(rate, rng);
    }
  }
}

long long CountModel::draw(Rng& rng) const {
  if (zero_inflated() && uniform01(rng) < structural_zero_prob_) return 0;
  return draw_base(rng);
}

DiscreteSample CountModel::sample(std::size_t n, Rng& rng) const {
  if (n < 1) throw std::domain_error("sample: n must be positive");
  std::vector<long long> draws(n);
  for (std::size_t i = 0; i < n; ++i) draws[i] = draw(rng);
  return DiscreteSample::from_values(draws);
}

}  // namespace smoothq

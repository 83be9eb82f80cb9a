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

#include "smoothq/truncation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace smoothq {

namespace {

constexpr double kIntegerCutTol = 1e-9;

void check_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::domain_error("truncation: k must be a positive real");
  }
}

// The theory needs cuts where the step CDF is continuous. A cut landing on
// an integer is refused outright instead of being nudged.
void check_cuts(double lower, double upper) {
  for (double cut : {lower, upper}) {
    if (std::fabs(cut - std::round(cut)) < kIntegerCutTol) {
      throw std::domain_error(
          "truncation cut " + std::to_string(cut) +
          " lands on an integer; choose an irrational k (e.g. pi, pi2, pi3)");
    }
  }
}

struct Window {
  double lower;
  double upper;
};

Window make_window(double mean, double sd, double k) {
  const double lower = std::max(-0.5, mean - k * sd);
  const double upper = mean + k * sd;
  check_cuts(lower, upper);
  if (upper <= lower) throw std::domain_error("truncation: empty window");
  return {lower, upper};
}

template <typename CdfFn>
TruncationDesign finish_design(double k, const Window& w, std::vector<long long> support,
                               CdfFn&& cdf) {
  if (support.size() < 2) {
    throw std::domain_error("truncation: window holds fewer than two support points");
  }
  TruncationDesign design;
  design.k = k;
  design.lower = w.lower;
  design.upper = w.upper;
  design.cdf_at_lower = cdf(w.lower);
  design.cdf_at_upper = cdf(w.upper);
  const double denom = design.cdf_at_upper - design.cdf_at_lower;
  if (!(denom > 0.0)) {
    throw std::domain_error("truncation: no probability mass inside the window");
  }
  design.f_star.reserve(support.size());
  for (long long y : support) {
    double f = (cdf(static_cast<double>(y)) - design.cdf_at_lower) / denom;
    if (f < 0.0) f = 0.0;
    if (f > 1.0) f = 1.0;
    design.f_star.push_back(f);
  }
  design.support = std::move(support);
  return design;
}

std::vector<long long> integers_in(const Window& w) {
  const long long first = static_cast<long long>(std::ceil(w.lower));
  const long long last = static_cast<long long>(std::floor(w.upper));
  std::vector<long long> support;
  for (long long y = first; y <= last; ++y) support.push_back(y);
  return support;
}

}  // namespace

TruncationDesign population_design(const CountModel& model, double k) {
  check_k(k);
  const ModelMoments m = model.moments();
  if (!(m.variance > 0.0)) throw std::domain_error("truncation: model variance must be positive");
  const Window w = make_window(m.mean, std::sqrt(m.variance), k);
  return finish_design(k, w, integers_in(w), [&model](double t) { return model.cdf(t); });
}

TruncationDesign empirical_design(const DiscreteSample& sample, double k, SupportPolicy policy) {
  check_k(k);
  const SampleMoments m = sample.moments();
  if (!(m.sd > 0.0)) throw std::domain_error("truncation: degenerate sample (sd = 0)");
  const Window w = make_window(m.mean, m.sd, k);
  std::vector<long long> support;
  if (policy == SupportPolicy::window_integers) {
    support = integers_in(w);
  } else {
    for (long long v : sample.values()) {
      if (static_cast<double>(v) > w.lower && static_cast<double>(v) < w.upper) {
        support.push_back(v);
      }
    }
  }
  auto design =
      finish_design(k, w, std::move(support), [&sample](double t) { return sample.ecdf(t); });

  // The window mass added to the low-cut mass must reproduce the ECDF at the
  // high cut; this holds because no observation sits between a cut and its
  // neighbouring support point.
  const double in_window =
      static_cast<double>(sample.count_above(design.lower) - sample.count_above(design.upper)) /
      static_cast<double>(sample.size());
  if (std::fabs((design.cdf_at_lower + in_window) - design.cdf_at_upper) > 1e-12) {
    throw std::logic_error("truncation: window mass does not close against the ECDF");
  }
  return design;
}

double coverage_bound(double k) {
  if (!(k > 1.0)) throw std::domain_error("coverage_bound: k must exceed 1");
  return 1.0 - 1.0 / (k * k);
}

double coverage_bound(double k, long long n) {
  if (!(k > 1.0)) throw std::domain_error("coverage_bound: k must exceed 1");
  if (n < 1) throw std::domain_error("coverage_bound: n must be positive");
  const double nd = static_cast<double>(n);
  const double expr = (nd + 1.0) / nd * ((nd - 1.0) / (k * k) + 1.0);
  // greatest-integer part; the epsilon restores values that exact rational
  // arithmetic would put exactly on an integer
  const double integer_part = std::floor(expr + 1e-12 * expr);
  return 1.0 - integer_part / (nd + 1.0);
}

double parse_k(std::string_view text) {
  if (text == "pi") return std::numbers::pi;
  if (text == "pi2") return std::numbers::pi * std::numbers::pi;
  if (text == "pi3") return std::numbers::pi * std::numbers::pi * std::numbers::pi;
  std::size_t pos = 0;
  double value = 0.0;
  const std::string s(text);
  try {
    value = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("k: expected pi|pi2|pi3 or a real number, got `" + s + "`");
  }
  if (pos != s.size()) {
    throw std::invalid_argument("k: expected pi|pi2|pi3 or a real number, got `" + s + "`");
  }
  check_k(value);
  return value;
}

}  // namespace smoothq

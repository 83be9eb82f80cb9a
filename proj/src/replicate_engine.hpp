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

// Internal machinery shared by the bootstrap, tail-probability and Monte
// Carlo drivers: per-replicate RNG streams, worker scheduling, multinomial
// resampling with redraw of unusable draws, and order-fixed reduction.

#ifndef SMOOTHQ_REPLICATE_ENGINE_HPP
#define SMOOTHQ_REPLICATE_ENGINE_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "smoothq/discrete_sample.hpp"
#include "smoothq/matrix.hpp"
#include "smoothq/rng.hpp"

namespace smoothq::detail {

inline unsigned resolve_threads(unsigned requested, std::size_t replicates) {
  unsigned t = requested != 0 ? requested : std::thread::hardware_concurrency();
  if (t == 0) t = 1;
  if (t > replicates) t = static_cast<unsigned>(replicates);
  return t == 0 ? 1 : t;
}

/// Runs fn(index, rng, row) for index = 0..m-1 on `threads` workers. Each
/// replicate derives its own stream from the master seed, and rows are
/// written to disjoint matrix rows, so the result is bit-identical for any
/// worker count. fn returns the number of redraws it needed; the sum is
/// reported through `skipped`.
template <typename Fn>
Matrix run_replicates(std::size_t m, std::size_t cols, std::uint64_t seed, unsigned threads,
                      std::size_t& skipped, Fn&& fn) {
  Matrix rows(m, cols);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> skip_count{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&]() {
    std::vector<double> row(cols);
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= m) break;
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (error) break;
      }
      try {
        Rng rng = make_stream(seed, idx);
        skip_count += fn(idx, rng, row.data());
        for (std::size_t c = 0; c < cols; ++c) rows(idx, c) = row[c];
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        break;
      }
    }
  };

  const unsigned n_threads = resolve_threads(threads, m);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  skipped = skip_count.load();
  if (skipped * 100 > m) {
    throw std::runtime_error("more than 1% of replicates were degenerate and redrawn (" +
                             std::to_string(skipped) + " of " + std::to_string(m) + ")");
  }
  return rows;
}

/// Multinomial draw over the frequency table: sequential conditional
/// binomials, category counts summing exactly to n.
inline std::vector<long long> multinomial_counts(const std::vector<long long>& counts,
                                                 Rng& rng) {
  long long total = 0;
  for (long long c : counts) total += c;
  std::vector<long long> out(counts.size(), 0);
  long long remaining = total;
  long long mass_left = total;
  for (std::size_t j = 0; j + 1 < counts.size(); ++j) {
    if (remaining == 0) {
      mass_left -= counts[j];
      continue;
    }
    double p = static_cast<double>(counts[j]) / static_cast<double>(mass_left);
    if (p > 1.0) p = 1.0;
    out[j] = std::binomial_distribution<long long>(remaining, p)(rng);
    remaining -= out[j];
    mass_left -= counts[j];
  }
  out.back() = remaining;
  return out;
}

/// Resamples `sample` with replacement and evaluates `estimate` on the
/// result. Draws that the estimator cannot use — a single distinct value
/// (sd = 0) or a resample whose truncation design is rejected — are redrawn
/// from the same stream. Returns the redraw count.
template <typename Estimator>
std::size_t resampled_estimate(const DiscreteSample& sample, Rng& rng, Estimator&& estimate) {
  constexpr int kMaxAttempts = 100;
  std::size_t redraws = 0;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::vector<long long> drawn = multinomial_counts(sample.counts(), rng);
    std::vector<std::pair<long long, long long>> rows;
    rows.reserve(drawn.size());
    for (std::size_t j = 0; j < drawn.size(); ++j) {
      if (drawn[j] > 0) rows.emplace_back(sample.values()[j], drawn[j]);
    }
    if (rows.size() < 2) {
      ++redraws;
      continue;
    }
    try {
      estimate(DiscreteSample::from_counts(rows));
      return redraws;
    } catch (const std::domain_error&) {
      ++redraws;
    }
  }
  throw std::runtime_error("bootstrap: a replicate kept producing unusable resamples");
}

/// Column means and (m-1)-divisor covariance of the replicate matrix,
/// accumulated in replicate order.
inline void column_stats(const Matrix& rows, std::vector<double>& means, Matrix& cov) {
  const std::size_t m = rows.rows();
  const std::size_t l = rows.cols();
  means.assign(l, 0.0);
  for (std::size_t c = 0; c < l; ++c) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < m; ++i) acc += rows(i, c);
    means[c] = static_cast<double>(acc / static_cast<long double>(m));
  }
  cov = Matrix(l, l);
  if (m < 2) return;
  for (std::size_t a = 0; a < l; ++a) {
    for (std::size_t b = a; b < l; ++b) {
      long double acc = 0.0L;
      for (std::size_t i = 0; i < m; ++i) {
        acc += (static_cast<long double>(rows(i, a)) - means[a]) *
               (static_cast<long double>(rows(i, b)) - means[b]);
      }
      const double value = static_cast<double>(acc / static_cast<long double>(m - 1));
      cov(a, b) = value;
      cov(b, a) = value;
    }
  }
}

}  // namespace smoothq::detail

#endif  // SMOOTHQ_REPLICATE_ENGINE_HPP

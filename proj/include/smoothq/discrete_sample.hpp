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

#ifndef SMOOTHQ_DISCRETE_SAMPLE_HPP
#define SMOOTHQ_DISCRETE_SAMPLE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace smoothq {

struct SampleMoments {
  double mean;
  double sd;  // n-1 divisor
};

/// Frequency table of nonnegative integer counts. Values are stored sparsely
/// in increasing order; gaps inside [min, max] are legal and carry no mass.
/// Immutable after construction.
class DiscreteSample {
 public:
  /// Build from (value, count) rows. Values must be distinct nonnegative
  /// integers, counts positive; zero-count rows are dropped.
  static DiscreteSample from_counts(std::span<const std::pair<long long, long long>> rows);

  /// Aggregate raw observations into a frequency table.
  static DiscreteSample from_values(std::span<const long long> values);

  /// Parse CSV input: either two columns `value,count` (header optional) or
  /// one integer observation per line.
  static DiscreteSample load_csv(std::istream& in);
  static DiscreteSample load_csv_file(const std::string& path);

  std::size_t size() const { return n_; }
  const std::vector<long long>& values() const { return values_; }
  const std::vector<long long>& counts() const { return counts_; }
  long long min_value() const { return values_.front(); }
  long long max_value() const { return values_.back(); }

  /// Sample mean and standard deviation (n-1 divisor). Requires n >= 2.
  SampleMoments moments() const;

  /// Fraction of observations <= t.
  double ecdf(double t) const;

  /// Number of observations strictly greater than t.
  long long count_above(double t) const;

  /// Two-column CSV with header, one row per support point.
  std::string to_csv() const;

  /// FNV-1a digest of the frequency table, for report reproducibility
  /// metadata.
  std::uint64_t digest() const;

 private:
  DiscreteSample(std::vector<long long> values, std::vector<long long> counts);

  std::vector<long long> values_;
  std::vector<long long> counts_;
  std::vector<long long> cumulative_;
  std::size_t n_ = 0;
};

}  // namespace smoothq

#endif  // SMOOTHQ_DISCRETE_SAMPLE_HPP

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

#include "smoothq/discrete_sample.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace smoothq {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

bool parse_int(const std::string& field, long long& out) {
  const std::string t = trim(field);
  if (t.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(t, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == t.size();
}

}  // namespace

DiscreteSample::DiscreteSample(std::vector<long long> values, std::vector<long long> counts)
    : values_(std::move(values)), counts_(std::move(counts)) {
  cumulative_.resize(counts_.size());
  long long running = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    running += counts_[i];
    cumulative_[i] = running;
  }
  n_ = static_cast<std::size_t>(running);
  if (n_ < 1) throw std::invalid_argument("DiscreteSample: empty sample");
}

DiscreteSample DiscreteSample::from_counts(
    std::span<const std::pair<long long, long long>> rows) {
  std::map<long long, long long> table;
  for (const auto& [value, count] : rows) {
    if (value < 0) {
      throw std::invalid_argument("DiscreteSample: negative value " + std::to_string(value));
    }
    if (count < 0) {
      throw std::invalid_argument("DiscreteSample: negative count for value " +
                                  std::to_string(value));
    }
    if (count == 0) continue;
    if (!table.emplace(value, count).second) {
      throw std::invalid_argument("DiscreteSample: duplicate value " + std::to_string(value));
    }
  }
  if (table.empty()) throw std::invalid_argument("DiscreteSample: empty sample");
  std::vector<long long> values, counts;
  values.reserve(table.size());
  counts.reserve(table.size());
  for (const auto& [value, count] : table) {
    values.push_back(value);
    counts.push_back(count);
  }
  return DiscreteSample(std::move(values), std::move(counts));
}

DiscreteSample DiscreteSample::from_values(std::span<const long long> observations) {
  std::map<long long, long long> table;
  for (long long v : observations) {
    if (v < 0) throw std::invalid_argument("DiscreteSample: negative value " + std::to_string(v));
    ++table[v];
  }
  if (table.empty()) throw std::invalid_argument("DiscreteSample: empty sample");
  std::vector<long long> values, counts;
  for (const auto& [value, count] : table) {
    values.push_back(value);
    counts.push_back(count);
  }
  return DiscreteSample(std::move(values), std::move(counts));
}

DiscreteSample DiscreteSample::load_csv(std::istream& in) {
  std::vector<std::pair<long long, long long>> rows;
  std::vector<long long> raw;
  std::string line;
  bool first_content_line = true;
  int mode = 0;  // 0 undecided, 1 pairs, 2 raw
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.empty()) continue;

    long long v = 0;
    if (first_content_line && !parse_int(fields[0], v)) {
      // header row
      first_content_line = false;
      continue;
    }
    first_content_line = false;

    if (mode == 0) mode = fields.size() >= 2 ? 1 : 2;
    if (mode == 1) {
      long long c = 0;
      if (fields.size() < 2 || !parse_int(fields[0], v) || !parse_int(fields[1], c)) {
        throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                    ": expected `value,count`");
      }
      rows.emplace_back(v, c);
    } else {
      if (fields.size() != 1 || !parse_int(fields[0], v)) {
        throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                    ": expected a single integer observation");
      }
      raw.push_back(v);
    }
  }
  if (mode == 1) return from_counts(rows);
  return from_values(raw);
}

DiscreteSample DiscreteSample::load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  return load_csv(in);
}

SampleMoments DiscreteSample::moments() const {
  if (n_ < 2) throw std::domain_error("sample moments require n >= 2");
  long double sum = 0.0L;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    sum += static_cast<long double>(values_[i]) * counts_[i];
  }
  const long double mean = sum / static_cast<long double>(n_);
  long double ss = 0.0L;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const long double dev = values_[i] - mean;
    ss += dev * dev * counts_[i];
  }
  const long double var = ss / static_cast<long double>(n_ - 1);
  return SampleMoments{static_cast<double>(mean),
                       static_cast<double>(std::sqrt(static_cast<double>(var)))};
}

double DiscreteSample::ecdf(double t) const {
  if (t < static_cast<double>(values_.front())) return 0.0;
  // last index with value <= t
  auto it = std::upper_bound(values_.begin(), values_.end(), t,
                             [](double lhs, long long rhs) { return lhs < static_cast<double>(rhs); });
  const std::size_t idx = static_cast<std::size_t>(it - values_.begin());
  if (idx == 0) return 0.0;
  return static_cast<double>(cumulative_[idx - 1]) / static_cast<double>(n_);
}

long long DiscreteSample::count_above(double t) const {
  auto it = std::upper_bound(values_.begin(), values_.end(), t,
                             [](double lhs, long long rhs) { return lhs < static_cast<double>(rhs); });
  const std::size_t idx = static_cast<std::size_t>(it - values_.begin());
  const long long below = idx == 0 ? 0 : cumulative_[idx - 1];
  return static_cast<long long>(n_) - below;
}

std::string DiscreteSample::to_csv() const {
  std::string out = "value,count\n";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out += std::to_string(values_[i]) + "," + std::to_string(counts_[i]) + "\n";
  }
  return out;
}

std::uint64_t DiscreteSample::digest() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&hash](long long x) {
    auto u = static_cast<std::uint64_t>(x);
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (u >> (8 * byte)) & 0xffU;
      hash *= 0x100000001b3ULL;
    }
  };
  for (std::size_t i = 0; i < values_.size(); ++i) {
    mix(values_[i]);
    mix(counts_[i]);
  }
  return hash;
}

}  // namespace smoothq

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

#include "smoothq/fixtures.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace smoothq {

namespace {

using Rows = std::vector<std::pair<long long, long long>>;

const std::map<std::string, Rows, std::less<>>& tables() {
  static const std::map<std::string, Rows, std::less<>> kTables = {
      {"O", {{0, 7840}, {1, 1317}, {2, 239}, {3, 42}, {4, 14}, {5, 4}, {6, 4}, {7, 1}}},
      {"M1", {{0, 7700}, {1, 1317}, {2, 379}, {3, 42}, {4, 14}, {5, 4}, {6, 4}, {7, 1}}},
      {"M2", {{0, 7700}, {1, 1317}, {2, 279}, {3, 62}, {4, 34}, {5, 24}, {6, 24}, {7, 21}}},
      {"M3", {{0, 7700}, {1, 1317}, {2, 239}, {3, 42}, {4, 14}, {5, 4}, {6, 4}, {7, 141}}},
  };
  return kTables;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> kNames = {"O", "M1", "M2", "M3"};
  return kNames;
}

bool is_fixture_name(std::string_view name) {
  return tables().find(name) != tables().end();
}

const DiscreteSample& fixture(std::string_view name) {
  static const auto* kSamples = [] {
    auto* samples = new std::map<std::string, DiscreteSample, std::less<>>();
    for (const auto& [key, rows] : tables()) {
      samples->emplace(key, DiscreteSample::from_counts(rows));
    }
    return samples;
  }();
  const auto it = kSamples->find(name);
  if (it == kSamples->end()) {
    throw std::invalid_argument("unknown fixture `" + std::string(name) +
                                "` (expected O, M1, M2 or M3)");
  }
  return it->second;
}

}  // namespace smoothq

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

#ifndef SMOOTHQ_FIXTURES_HPP
#define SMOOTHQ_FIXTURES_HPP

#include <string_view>
#include <vector>

#include "smoothq/discrete_sample.hpp"

namespace smoothq {

/// Bundled automobile accident-count portfolios: the original risk profile
/// (O) and three tail modifications (M1, M2, M3) that move 140 zero-accident
/// policies to higher counts. Each totals 9,461 policies.
const std::vector<std::string>& fixture_names();

bool is_fixture_name(std::string_view name);

const DiscreteSample& fixture(std::string_view name);

}  // namespace smoothq

#endif  // SMOOTHQ_FIXTURES_HPP

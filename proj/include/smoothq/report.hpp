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

#ifndef SMOOTHQ_REPORT_HPP
#define SMOOTHQ_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "smoothq/bootstrap.hpp"
#include "smoothq/matrix.hpp"
#include "smoothq/risk.hpp"
#include "smoothq/sim_harness.hpp"

namespace smoothq::report {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "0.1.0";

json to_json(const Matrix& matrix);
json to_json(const BootstrapSummary& summary);  // replicate matrix omitted
json to_json(const StudyReport& report);
json to_json(const C5nsResult& result);
json to_json(const TailProbEstimate& estimate);

std::string tail_method_name(TailMethod method);

/// Column-aligned text table for the human-readable report form.
class TextTable {
 public:
  void header(std::vector<std::string> cells);
  void row(std::vector<std::string> cells);
  std::string str() const;

 private:
  std::vector<std::vector<std::string>> rows_;
  bool has_header_ = false;
};

std::string fmt(double value, int decimals);
std::string fmt_full(double value);
std::string render_matrix(const Matrix& matrix, int decimals);

}  // namespace smoothq::report

#endif  // SMOOTHQ_REPORT_HPP

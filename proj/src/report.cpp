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

#include "smoothq/report.hpp"

#include <cstdio>
#include <sstream>

namespace smoothq::report {

json to_json(const Matrix& matrix) {
  json rows = json::array();
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < matrix.cols(); ++j) row.push_back(matrix(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const BootstrapSummary& summary) {
  json out;
  out["m"] = summary.m;
  out["seed"] = summary.seed;
  out["levels"] = summary.levels;
  out["col_means"] = summary.col_means;
  out["cov"] = to_json(summary.cov);
  out["skipped"] = summary.skipped;
  return out;
}

json to_json(const StudyReport& report) {
  json out;
  out["mode"] = study_mode_name(report.mode);
  out["model"] = report.model_spec;
  out["k"] = report.k;
  out["levels"] = report.levels;
  if (report.mode != StudyMode::theoretical) {
    out["n"] = report.n;
    out["reps"] = report.reps;
    out["seed"] = report.seed;
  }
  out["means"] = report.means;
  if (report.ncov) {
    out["ncov"] = to_json(*report.ncov);
  } else {
    out["ncov"] = nullptr;
  }
  if (!report.se_means.empty()) out["se_means"] = report.se_means;
  if (report.mode != StudyMode::theoretical) out["skipped"] = report.skipped;
  if (report.sample_mean) {
    out["sample"] = {{"mean", *report.sample_mean}, {"sd", *report.sample_sd}};
  }
  return out;
}

json to_json(const C5nsResult& result) {
  json out;
  out["p"] = result.p;
  out["confidence"] = result.confidence;
  out["var_smoothed"] = result.var_smoothed;
  out["var_classical"] = result.var_classical;
  json rows = json::array();
  for (std::size_t i = 0; i < 5; ++i) {
    rows.push_back({{"level", result.levels[i]},
                    {"quantile", result.quantiles[i]},
                    {"lo", result.intervals[i].first},
                    {"hi", result.intervals[i].second}});
  }
  out["quantiles"] = std::move(rows);
  return out;
}

json to_json(const TailProbEstimate& estimate) {
  json out;
  out["a"] = estimate.threshold;
  out["a_corrected"] = estimate.corrected_threshold;
  out["method"] = tail_method_name(estimate.method);
  out["mean"] = estimate.mean;
  out["sd"] = estimate.sd;
  if (estimate.cv) {
    out["cv"] = *estimate.cv;
  } else {
    out["cv"] = nullptr;
  }
  return out;
}

std::string tail_method_name(TailMethod method) {
  return method == TailMethod::smoothed ? "smoothed" : "interpolated";
}

void TextTable::header(std::vector<std::string> cells) {
  rows_.insert(rows_.begin(), std::move(cells));
  has_header_ = true;
}

void TextTable::row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

std::string TextTable::str() const {
  std::vector<std::size_t> widths;
  for (const auto& row : rows_) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0) out << "  ";
      out << rows_[r][c];
      const std::size_t pad = widths[c] - rows_[r][c].size();
      if (c + 1 < rows_[r].size()) out << std::string(pad, ' ');
    }
    out << "\n";
    if (r == 0 && has_header_) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < widths.size(); ++c) total += widths[c] + (c > 0 ? 2 : 0);
      out << std::string(total, '-') << "\n";
    }
  }
  return out.str();
}

std::string fmt(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

std::string fmt_full(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string render_matrix(const Matrix& matrix, int decimals) {
  TextTable table;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    std::vector<std::string> cells;
    cells.reserve(matrix.cols());
    for (std::size_t j = 0; j < matrix.cols(); ++j) cells.push_back(fmt(matrix(i, j), decimals));
    table.row(std::move(cells));
  }
  return table.str();
}

}  // namespace smoothq::report

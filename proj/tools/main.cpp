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

// smoothq — smoothed quantile risk measures for claim-count data.
//
// Subcommands: quantile, quantile-curve, c5ns, tailprob, bootstrap,
// simulate, coverage. Reports go to stdout or --out as text, JSON or CSV.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smoothq/asymptotics.hpp"
#include "smoothq/bootstrap.hpp"
#include "smoothq/fixtures.hpp"
#include "smoothq/report.hpp"
#include "smoothq/risk.hpp"
#include "smoothq/sim_harness.hpp"
#include "smoothq/smoothing.hpp"

using namespace smoothq;
using report::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20260810;

struct GlobalOptions {
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "text";
  unsigned threads = 0;
};

struct LoadedData {
  DiscreteSample sample;
  std::string source;
};

LoadedData load_data(const std::string& spec) {
  if (is_fixture_name(spec)) {
    return {fixture(spec), "fixture:" + spec};
  }
  return {DiscreteSample::load_csv_file(spec), spec};
}

std::string hex_digest(std::uint64_t digest) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(digest));
  return buffer;
}

json make_meta(const std::string& command, const GlobalOptions& opts,
               std::optional<double> k_value, const LoadedData* data) {
  json meta;
  meta["version"] = std::string(report::kVersion);
  meta["command"] = command;
  if (k_value) meta["k"] = *k_value;
  meta["seed"] = opts.seed;
  if (data != nullptr) {
    meta["input"] = {{"source", data->source},
                     {"digest", hex_digest(data->sample.digest())},
                     {"n", data->sample.size()}};
  }
  return meta;
}

void emit(const GlobalOptions& opts, const json& payload, const std::string& text,
          const std::string& csv) {
  std::string body;
  if (opts.format == "json") {
    body = payload.dump(2) + "\n";
  } else if (opts.format == "csv") {
    body = csv;
  } else {
    body = text;
  }
  if (opts.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + opts.out);
  file << body;
}

std::vector<double> parse_number_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": bad number `" + item + "`");
    }
    if (pos != item.size()) {
      throw std::invalid_argument(std::string(what) + ": bad number `" + item + "`");
    }
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

// translate levels of the original variable onto the truncated scale
std::vector<double> map_levels_from_global(const TruncationDesign& design,
                                           const std::vector<double>& levels) {
  std::vector<double> mapped;
  mapped.reserve(levels.size());
  for (double u : levels) mapped.push_back(level_from_global(design, u));
  return mapped;
}

int cmd_quantile(const GlobalOptions& opts, const std::string& data_spec,
                 const std::string& k_text, const std::string& levels_text) {
  const LoadedData data = load_data(data_spec);
  const double k = parse_k(k_text);
  const std::vector<double> levels = parse_number_list(levels_text, "--u");
  const TruncationDesign design =
      empirical_design(data.sample, k, SupportPolicy::observed_values);
  const std::vector<double> mapped = map_levels_from_global(design, levels);

  json payload;
  payload["meta"] = make_meta("quantile", opts, k, &data);
  json rows = json::array();
  report::TextTable table;
  table.header({"u", "quantile"});
  std::string csv = "u,quantile\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double q = smoothed_quantile(design, mapped[i]);
    rows.push_back({{"u", levels[i]}, {"u_truncated", mapped[i]}, {"quantile", q}});
    table.row({report::fmt(levels[i], 4), report::fmt(q, 3)});
    csv += report::fmt_full(levels[i]) + "," + report::fmt_full(q) + "\n";
  }
  payload["estimates"] = std::move(rows);
  payload["design"] = {{"d", design.d()},
                       {"lower", design.lower},
                       {"upper", design.upper},
                       {"support_min", design.support.front()},
                       {"support_max", design.support.back()}};
  emit(opts, payload, table.str(), csv);
  return 0;
}

int cmd_quantile_curve(const GlobalOptions& opts, const std::string& data_spec,
                       const std::string& model_spec, const std::string& k_text, int points) {
  if (data_spec.empty() == model_spec.empty()) {
    throw std::invalid_argument("quantile-curve needs exactly one of --data or --model");
  }
  const double k = parse_k(k_text);
  if (points < 2) throw std::invalid_argument("--points must be at least 2");

  std::optional<LoadedData> data;
  TruncationDesign design;
  if (!data_spec.empty()) {
    data = load_data(data_spec);
    design = empirical_design(data->sample, k, SupportPolicy::observed_values);
  } else {
    design = population_design(CountModel::parse(model_spec), k);
  }

  json payload;
  payload["meta"] = make_meta("quantile-curve", opts, k, data ? &*data : nullptr);
  if (!model_spec.empty()) payload["meta"]["model"] = model_spec;
  json rows = json::array();
  std::string csv = "u,quantile\n";
  report::TextTable table;
  table.header({"u", "quantile"});
  for (int i = 1; i <= points; ++i) {
    const double u = static_cast<double>(i) / (points + 1);
    const double q = smoothed_quantile(design, u);
    rows.push_back({{"u", u}, {"quantile", q}});
    csv += report::fmt_full(u) + "," + report::fmt_full(q) + "\n";
    table.row({report::fmt(u, 4), report::fmt(q, 4)});
  }
  payload["curve"] = std::move(rows);
  emit(opts, payload, table.str(), csv);
  return 0;
}

int cmd_c5ns(const GlobalOptions& opts, const std::string& data_spec, double p,
             const std::string& k_text, double confidence) {
  const LoadedData data = load_data(data_spec);
  const double k = parse_k(k_text);
  const C5nsResult result = c5ns_summary(data.sample, p, k, confidence);

  json payload;
  payload["meta"] = make_meta("c5ns", opts, k, &data);
  payload["result"] = report::to_json(result);

  report::TextTable table;
  table.header({"level", "quantile", "ci_lo", "ci_hi"});
  std::string csv = "level,quantile,ci_lo,ci_hi\n";
  for (int i = 0; i < 5; ++i) {
    table.row({report::fmt(result.levels[i], 4), report::fmt(result.quantiles[i], 2),
               report::fmt(result.intervals[i].first, 2),
               report::fmt(result.intervals[i].second, 2)});
    csv += report::fmt_full(result.levels[i]) + "," + report::fmt_full(result.quantiles[i]) +
           "," + report::fmt_full(result.intervals[i].first) + "," +
           report::fmt_full(result.intervals[i].second) + "\n";
  }
  std::string text = "C5NS beyond VaR at p = " + report::fmt(p, 3) + " (" +
                     report::fmt(100.0 * confidence, 0) + "% intervals)\n" + table.str() +
                     "VaR smoothed = " + report::fmt(result.var_smoothed, 3) +
                     ", classical = " + std::to_string(result.var_classical) + "\n";
  emit(opts, payload, text, csv);
  return 0;
}

int cmd_tailprob(const GlobalOptions& opts, const std::string& data_spec,
                 const std::string& thresholds_text, const std::string& methods_text,
                 std::size_t m, const std::string& k_text) {
  const LoadedData data = load_data(data_spec);
  const double k = parse_k(k_text);
  const std::vector<double> thresholds = parse_number_list(thresholds_text, "--a");

  std::vector<TailMethod> methods;
  {
    std::stringstream ss(methods_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "smoothed") {
        methods.push_back(TailMethod::smoothed);
      } else if (item == "interpolated") {
        methods.push_back(TailMethod::interpolated);
      } else {
        throw std::invalid_argument("--method: expected smoothed|interpolated, got `" + item +
                                    "`");
      }
    }
    if (methods.empty()) throw std::invalid_argument("--method: empty list");
  }

  json payload;
  payload["meta"] = make_meta("tailprob", opts, k, &data);
  payload["m"] = m;
  json rows = json::array();
  report::TextTable table;
  table.header({"a", "method", "point", "boot_mean", "boot_sd", "cv"});
  std::string csv = "a,method,point,boot_mean,boot_sd,cv\n";
  for (double a : thresholds) {
    for (TailMethod method : methods) {
      const double point = method == TailMethod::smoothed
                               ? smoothed_tail_prob(data.sample, k, a)
                               : interpolated_tail_prob(data.sample, a);
      TailProbEstimate estimate =
          tail_prob_bootstrap(data.sample, a, method, m, k, opts.seed, opts.threads);
      json row = report::to_json(estimate);
      row["point"] = point;
      rows.push_back(std::move(row));
      const std::string cv_text = estimate.cv ? report::fmt(*estimate.cv, 3) : "n/a";
      table.row({report::fmt(a, 2), report::tail_method_name(method), report::fmt(point, 3),
                 report::fmt(estimate.mean, 3), report::fmt(estimate.sd, 3), cv_text});
      csv += report::fmt_full(a) + "," + report::tail_method_name(method) + "," +
             report::fmt_full(point) + "," + report::fmt_full(estimate.mean) + "," +
             report::fmt_full(estimate.sd) + "," +
             (estimate.cv ? report::fmt_full(*estimate.cv) : std::string()) + "\n";
    }
  }
  payload["estimates"] = std::move(rows);
  emit(opts, payload, table.str(), csv);
  return 0;
}

int cmd_bootstrap(const GlobalOptions& opts, const std::string& data_spec, std::size_t m,
                  const std::string& k_text, const std::string& levels_text) {
  const LoadedData data = load_data(data_spec);
  const double k = parse_k(k_text);
  const std::vector<double> levels = parse_number_list(levels_text, "--levels");

  const BootstrapSummary summary =
      bootstrap_quantiles(data.sample, m, k, levels, opts.seed, opts.threads);

  json payload;
  payload["meta"] = make_meta("bootstrap", opts, k, &data);
  payload["result"] = report::to_json(summary);
  json ncov = json::array();
  Matrix scaled(levels.size(), levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < levels.size(); ++j) {
      scaled(i, j) = summary.cov(i, j) * static_cast<double>(data.sample.size());
      row.push_back(scaled(i, j));
    }
    ncov.push_back(std::move(row));
  }
  payload["result"]["ncov"] = std::move(ncov);

  report::TextTable table;
  table.header({"level", "mean"});
  std::string csv = "level,mean\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    table.row({report::fmt(levels[i], 4), report::fmt(summary.col_means[i], 3)});
    csv += report::fmt_full(levels[i]) + "," + report::fmt_full(summary.col_means[i]) + "\n";
  }
  const std::string text = "bootstrap means over m = " + std::to_string(m) + " resamples\n" +
                           table.str() + "covariance (x n):\n" +
                           report::render_matrix(scaled, 3);
  emit(opts, payload, text, csv);
  return 0;
}

int cmd_simulate(const GlobalOptions& opts, const std::string& model_spec,
                 const std::string& k_text, std::size_t n, std::size_t reps,
                 const std::string& mode_text, const std::string& levels_text) {
  StudyConfig config{CountModel::parse(model_spec),
                     parse_k(k_text),
                     n,
                     reps,
                     parse_number_list(levels_text, "--levels"),
                     opts.seed,
                     parse_study_mode(mode_text),
                     opts.threads};
  const StudyReport study = run_study(config);

  json payload;
  payload["meta"] = make_meta("simulate", opts, config.k, nullptr);
  payload["meta"]["model"] = config.model.spec_string();
  payload["result"] = report::to_json(study);

  report::TextTable table;
  table.header({"level", "mean"});
  std::string csv = "level,mean\n";
  for (std::size_t i = 0; i < study.levels.size(); ++i) {
    table.row({report::fmt(study.levels[i], 4), report::fmt(study.means[i], 3)});
    csv += report::fmt_full(study.levels[i]) + "," + report::fmt_full(study.means[i]) + "\n";
  }
  std::string text =
      study_mode_name(study.mode) + " study of " + study.model_spec + "\n" + table.str();
  if (study.ncov) {
    text += "covariance (x n):\n" + report::render_matrix(*study.ncov, 3);
  }
  emit(opts, payload, text, csv);
  return 0;
}

int cmd_coverage(const GlobalOptions& opts, const std::string& k_text,
                 const std::string& n_text) {
  const double k = parse_k(k_text);
  double bound = 0.0;
  json payload;
  payload["meta"] = make_meta("coverage", opts, k, nullptr);
  if (n_text.empty() || n_text == "inf") {
    bound = coverage_bound(k);
    payload["n"] = nullptr;
  } else {
    std::size_t pos = 0;
    const long long n = std::stoll(n_text, &pos);
    if (pos != n_text.size()) throw std::invalid_argument("--n: bad integer `" + n_text + "`");
    bound = coverage_bound(k, n);
    payload["n"] = n;
  }
  payload["bound"] = bound;
  const std::string text = report::fmt(bound, 3) + "\n";
  emit(opts, payload, text, "bound\n" + report::fmt_full(bound) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smoothed quantile risk measures for discrete claim-count data"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--seed", opts.seed, "master seed for randomized commands");
  app.add_option("--out", opts.out, "write the report to a file instead of stdout");
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", opts.threads, "worker cap for replicated computations");

  std::string q_data, q_k = "pi3", q_levels;
  auto* quantile = app.add_subcommand("quantile", "smoothed quantiles of a data sample");
  quantile->add_option("--data", q_data, "fixture name (O, M1, M2, M3) or CSV path")
      ->required();
  quantile->add_option("--k", q_k, "window half-width in sd units (pi|pi2|pi3|real)");
  quantile->add_option("--u", q_levels, "comma list of levels in (0,1)")->required();

  std::string qc_data, qc_model, qc_k = "pi3";
  int qc_points = 200;
  auto* curve = app.add_subcommand("quantile-curve", "level/quantile pairs for plotting");
  curve->add_option("--data", qc_data, "fixture name or CSV path");
  curve->add_option("--model", qc_model, "model spec, e.g. zinb:r=1,beta=1,c=0.8");
  curve->add_option("--k", qc_k, "window half-width");
  curve->add_option("--points", qc_points, "number of grid points");

  std::string c_data, c_k = "pi3";
  double c_p = 0.90, c_conf = 0.95;
  auto* c5ns = app.add_subcommand("c5ns", "conditional five number summary beyond VaR");
  c5ns->add_option("--data", c_data, "fixture name or CSV path")->required();
  c5ns->add_option("--p", c_p, "base VaR level");
  c5ns->add_option("--k", c_k, "window half-width");
  c5ns->add_option("--conf", c_conf, "confidence level for the intervals");

  std::string t_data, t_a, t_methods = "smoothed,interpolated", t_k = "pi3";
  std::size_t t_m = 1000;
  auto* tail = app.add_subcommand("tailprob", "tail probabilities with bootstrap dispersion");
  tail->add_option("--data", t_data, "fixture name or CSV path")->required();
  tail->add_option("--a", t_a, "comma list of thresholds")->required();
  tail->add_option("--method", t_methods, "comma list: smoothed,interpolated");
  tail->add_option("--m", t_m, "bootstrap resamples per estimate");
  tail->add_option("--k", t_k, "window half-width");

  std::string b_data, b_k = "pi3", b_levels = "0.25,0.5,0.75";
  std::size_t b_m = 10000;
  auto* boot = app.add_subcommand("bootstrap", "bootstrap the smoothed quantile vector");
  boot->add_option("--data", b_data, "fixture name or CSV path")->required();
  boot->add_option("--m", b_m, "number of resamples");
  boot->add_option("--k", b_k, "window half-width");
  boot->add_option("--levels", b_levels, "comma list of levels");

  std::string s_model, s_k = "pi2", s_mode = "simulate", s_levels = "0.25,0.5,0.75";
  std::size_t s_n = 1000, s_reps = 10000;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo study of a claim-count model");
  sim->add_option("--model", s_model, "model spec")->required();
  sim->add_option("--k", s_k, "window half-width");
  sim->add_option("--n", s_n, "sample size per replicate");
  sim->add_option("--reps", s_reps, "replicates (or resamples in bootstrap-validate mode)");
  sim->add_option("--mode", s_mode, "simulate|bootstrap-validate|theoretical");
  sim->add_option("--levels", s_levels, "comma list of levels");

  std::string cov_k, cov_n;
  auto* coverage = app.add_subcommand("coverage", "window coverage probability bound");
  coverage->add_option("--k", cov_k, "window half-width")->required();
  coverage->add_option("--n", cov_n, "sample size, or `inf`");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();  // global flags may follow the subcommand
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (quantile->parsed()) return cmd_quantile(opts, q_data, q_k, q_levels);
    if (curve->parsed()) return cmd_quantile_curve(opts, qc_data, qc_model, qc_k, qc_points);
    if (c5ns->parsed()) return cmd_c5ns(opts, c_data, c_p, c_k, c_conf);
    if (tail->parsed()) return cmd_tailprob(opts, t_data, t_a, t_methods, t_m, t_k);
    if (boot->parsed()) return cmd_bootstrap(opts, b_data, b_m, b_k, b_levels);
    if (sim->parsed()) return cmd_simulate(opts, s_model, s_k, s_n, s_reps, s_mode, s_levels);
    if (coverage->parsed()) return cmd_coverage(opts, cov_k, cov_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

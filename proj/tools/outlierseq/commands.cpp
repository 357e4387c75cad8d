// Copyright 2026 The outlierseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "outlierseq/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "outlierseq/analysis.hpp"
#include "outlierseq/cluster_tests.hpp"
#include "outlierseq/errors.hpp"
#include "outlierseq/gl_tests.hpp"
#include "outlierseq/manifest.hpp"
#include "outlierseq/presets.hpp"
#include "outlierseq/scenario.hpp"
#include "outlierseq/sequence_csv.hpp"
#include "outlierseq/simulation.hpp"

namespace outlierseq::cli {

namespace {

using nlohmann::json;

constexpr const char* kCsvHeader =
    "test_name,scenario_kind,M,T,n,trials,errors,error_rate,avg_iterations,seed,wall_time_seconds";

std::string format_double(double v) {
  if (v == kInfinity) return "inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", v);
  return buffer;
}

json json_number(double v) { return v == kInfinity ? json("inf") : json(v); }

std::string join_indices(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  return s.str();
}

std::string join_values(std::span<const double> v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << format_double(v[i]);
  return s.str();
}

std::vector<double> parse_vector(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::stringstream fields(text);
  std::string item;
  while (std::getline(fields, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InvalidInput(field + ": cannot parse '" + item + "' as a number");
    }
  }
  if (out.empty()) throw InvalidInput(field + ": empty probability vector");
  return out;
}

Pmf parse_pmf(const std::string& text, const std::string& field) {
  try {
    return Pmf(parse_vector(text, field));
  } catch (const InvalidInput& e) {
    const std::string what = e.what();
    if (what.rfind(field, 0) == 0) throw;
    throw InvalidInput(field + ": " + what);
  }
}

std::vector<Pmf> parse_pmf_list(const std::string& text, const std::string& field) {
  std::vector<Pmf> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) out.push_back(parse_pmf(group, field));
  if (out.empty()) throw InvalidInput(field + ": no distributions given");
  return out;
}

json pmf_json(const Pmf& p) { return json(std::vector<double>(p.probs().begin(), p.probs().end())); }

std::string pmf_text(const Pmf& p) { return "(" + join_values(p.probs()) + ")"; }

// ---------------------------------------------------------------------------
// detect

struct DetectArgs {
  std::string input;
  std::string test;
  std::size_t t = 0;
  std::size_t probe = 0;
  std::size_t max_iterations = kDefaultIterationCap;
  bool allow_large = false;
  bool json_output = false;
  CLI::Option* t_option = nullptr;
};

int run_detect(const DetectArgs& a, std::ostream& out, std::ostream& err) {
  const TestKind kind = parse_test_kind(a.test);
  if (needs_known_t(kind) && a.t_option->count() == 0) {
    err << "error: test '" << a.test << "' needs the number of outliers; pass --t\n";
    return kFailure;
  }
  const SequenceSet data = read_sequence_csv_file(a.input);
  const auto gammas = data.empiricals();
  GlOptions gl;
  gl.allow_large = a.allow_large;

  const TrialTestResult r = run_test(kind, gammas, a.t, a.probe, a.max_iterations, gl);
  const bool until = kind == TestKind::kDelta2 || kind == TestKind::kDelta3;
  const bool converged = r.converged;

  json report{{"test", a.test},
              {"sequences", data.sequence_count()},
              {"length", data.length()},
              {"alphabet", data.alphabet().size()},
              {"detected", r.detected},
              {"no_outliers_found", r.no_outliers_found}};
  if (kind == TestKind::kGlKnown) {
    report["cost"] = json_number(gl_cost_known_t(gammas, OutlierSet(r.detected, gammas.size())));
  } else if (kind == TestKind::kGlUnknown) {
    const auto c = gl_cost_unknown(gammas, OutlierSet(r.detected, gammas.size()));
    report["cost"] = {{"typical", json_number(c.typical_cost)},
                      {"outlier", json_number(c.outlier_cost)},
                      {"total", json_number(c.total)}};
  } else {
    report["iterations"] = r.iterations;
    report["converged"] = converged;
    json trace = json::array();
    for (double c : r.cost_trace) trace.push_back(json_number(c));
    report["cost_trace"] = trace;
  }

  if (r.hit_iteration_cap) {
    err << "warning: stopped at the iteration cap of " << a.max_iterations
        << " without convergence\n";
  }
  if (a.json_output) {
    out << report.dump(2) << "\n";
    return kOk;
  }
  out << "test: " << a.test << "\n";
  out << "sequences: " << data.sequence_count() << " (length " << data.length()
      << ", alphabet " << data.alphabet().size() << ")\n";
  if (r.no_outliers_found) {
    out << "detected: none (the clustering collapsed into a single cluster)\n";
  } else {
    out << "detected: " << join_indices(r.detected) << "\n";
  }
  if (kind == TestKind::kGlKnown) {
    out << "cost: " << format_double(report["cost"].is_string() ? kInfinity : report["cost"].get<double>())
        << "\n";
  } else if (kind == TestKind::kGlUnknown) {
    const auto c = gl_cost_unknown(gammas, OutlierSet(r.detected, gammas.size()));
    out << "cost: typical " << format_double(c.typical_cost) << ", outlier "
        << format_double(c.outlier_cost) << ", total " << format_double(c.total) << "\n";
  } else {
    out << "iterations: " << r.iterations << "\n";
    if (until) out << "converged: " << (converged ? "yes" : "no") << "\n";
    out << "cost_trace: " << join_values(r.cost_trace) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string preset;
  std::string config_path;
  std::string out_path;
  std::string manifest_path;
  bool reproducible = false;
  SimulateOptions flags;
  std::string pi_text;
  std::string mu_text;
  std::size_t fixed_probe = 0;
  std::map<std::string, CLI::Option*> options;

  bool given(const std::string& name) const {
    auto it = options.find(name);
    return it != options.end() && it->second->count() > 0;
  }
};

SimulateOptions resolve_options(const SimulateArgs& a) {
  json file = json::object();
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in) throw ConfigError("config: cannot open '" + a.config_path + "'");
    try {
      in >> file;
    } catch (const json::exception& e) {
      throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!file.is_object()) throw ConfigError("config: expected a JSON object");
    // A run manifest replays the configuration it recorded.
    if (file.contains("subcommand") && file.contains("config") && file["config"].is_object()) {
      file = json(file["config"]);
      for (const char* key : {"resolved_scenarios", "output_csv", "reproducible"}) file.erase(key);
    }
  }
  std::string preset = a.preset;
  if (preset.empty() && file.contains("preset") && file["preset"].is_string()) {
    preset = file["preset"].get<std::string>();
  }
  SimulateOptions o = preset.empty() ? SimulateOptions{} : preset_options(preset);
  file.erase("preset");
  merge_json(file, o);
  const SimulateOptions& f = a.flags;
  if (a.given("--kind")) o.kind = f.kind;
  if (a.given("--alphabet")) o.alphabet = f.alphabet;
  if (a.given("--m")) o.m = f.m;
  if (a.given("--t")) o.t = f.t;
  if (a.given("--n-grid")) o.n_grid = f.n_grid;
  if (a.given("--m-grid")) o.m_grid = f.m_grid;
  if (a.given("--t-divisor")) o.t_divisor = f.t_divisor;
  if (a.given("--trials")) o.trials = f.trials;
  if (a.given("--seed")) o.seed = f.seed;
  if (a.given("--tests")) o.tests = f.tests;
  if (a.given("--pi")) o.pi = parse_vector(a.pi_text, "pi");
  if (a.given("--mu")) o.mu = parse_vector(a.mu_text, "mu");
  if (a.given("--sigma")) o.sigma = f.sigma;
  if (a.given("--min-tv")) o.min_tv = f.min_tv;
  if (a.given("--workers")) o.workers = f.workers;
  if (a.given("--max-iterations")) o.max_iterations = f.max_iterations;
  if (a.given("--fixed-probe")) o.fixed_probe = a.fixed_probe;
  if (a.given("--allow-large-enumeration")) o.allow_large_enumeration = true;
  return o;
}

std::optional<Pmf> option_pmf(const std::optional<std::vector<double>>& v, const std::string& field) {
  if (!v) return std::nullopt;
  try {
    return Pmf(*v);
  } catch (const InvalidInput& e) {
    throw ConfigError(field + ": " + e.what());
  }
}

ScenarioSpec scenario_spec(const SimulateOptions& o) {
  ScenarioSpec spec;
  try {
    spec.kind = parse_scenario_kind(o.kind);
  } catch (const InvalidInput& e) {
    throw ConfigError(std::string("kind: ") + e.what());
  }
  spec.alphabet_size = o.alphabet;
  spec.m = o.m;
  spec.t = o.t;
  spec.typical = option_pmf(o.pi, "pi");
  spec.outlier = option_pmf(o.mu, "mu");
  spec.min_tv = o.min_tv;
  spec.sigma = o.sigma;
  if (o.alphabet < 2) throw ConfigError("alphabet: must be at least 2");
  if (!(o.sigma > 0.0)) throw ConfigError("sigma: must be positive");
  return spec;
}

std::vector<TestKind> parse_tests(const std::vector<std::string>& names) {
  std::vector<TestKind> out;
  for (const auto& n : names) {
    try {
      out.push_back(parse_test_kind(n));
    } catch (const InvalidInput& e) {
      throw ConfigError(std::string("tests: ") + e.what());
    }
  }
  if (out.empty()) throw ConfigError("tests: select at least one test");
  return out;
}

json scenario_json(const Scenario& s) {
  json typ = json::array();
  for (const auto& p : s.typical_pmfs) typ.push_back(pmf_json(p));
  json outl = json::array();
  for (const auto& p : s.outlier_pmfs) outl.push_back(pmf_json(p));
  return {{"kind", to_string(s.kind)},
          {"m", s.sequence_count()},
          {"true_set", std::vector<std::size_t>(s.true_set.indices().begin(), s.true_set.indices().end())},
          {"typical_pmfs", typ},
          {"outlier_pmfs", outl}};
}

void write_csv(std::ostream& csv, const std::vector<SimRecord>& records, bool reproducible) {
  csv << kCsvHeader << "\n";
  for (const auto& r : records) {
    csv << r.test_name << ',' << to_string(r.scenario_kind) << ',' << r.m << ',' << r.t << ','
        << r.n << ',' << r.trials << ',' << r.errors << ',' << format_double(r.error_rate) << ','
        << format_double(r.avg_iterations) << ',' << r.seed << ','
        << (reproducible ? std::string("0") : format_double(r.wall_time_seconds)) << "\n";
  }
}

std::string default_manifest_path(const std::string& csv_path) {
  const std::string suffix = ".csv";
  if (csv_path.size() > suffix.size() &&
      csv_path.compare(csv_path.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return csv_path.substr(0, csv_path.size() - suffix.size()) + ".manifest.json";
  }
  return csv_path + ".manifest.json";
}

int run_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  RunManifest manifest;
  manifest.subcommand = "simulate";
  manifest.version = version_string();
  manifest.started_at = utc_timestamp();

  const SimulateOptions o = resolve_options(a);
  if (o.trials < 1) throw ConfigError("trials: must be at least 1");
  if (o.n_grid.empty()) throw ConfigError("n_grid: give --n-grid or a preset");
  const auto tests = parse_tests(o.tests);
  const ScenarioSpec spec = scenario_spec(o);

  std::vector<SimRecord> records;
  json scenarios = json::array();
  if (!o.m_grid.empty()) {
    if (o.n_grid.size() != 1) throw ConfigError("n_grid: an M sweep takes exactly one n");
    MSweepConfig sweep;
    sweep.base = spec;
    sweep.m_grid = o.m_grid;
    sweep.t_divisor = o.t_divisor;
    sweep.n = o.n_grid.front();
    sweep.trials = o.trials;
    sweep.master_seed = o.seed;
    sweep.workers = o.workers;
    sweep.tests = tests;
    sweep.max_iterations = o.max_iterations;
    for (std::size_t m : o.m_grid) {
      ScenarioSpec s = spec;
      s.m = m;
      s.t = std::max<std::size_t>(1, m / std::max<std::size_t>(o.t_divisor, 1));
      Engine rng = scenario_engine(o.seed);
      scenarios.push_back(scenario_json(build_scenario(s, rng)));
    }
    records = run_m_sweep(sweep);
  } else {
    Engine rng = scenario_engine(o.seed);
    SimConfig config(build_scenario(spec, rng));
    config.n_grid = o.n_grid;
    config.trials = o.trials;
    config.master_seed = o.seed;
    config.tests = tests;
    config.workers = o.workers;
    config.max_iterations = o.max_iterations;
    config.gl.allow_large = o.allow_large_enumeration;
    if (o.fixed_probe) {
      config.random_probe = false;
      config.fixed_probe = *o.fixed_probe;
    }
    scenarios.push_back(scenario_json(config.scenario));
    records = run_sim(config).records;
  }

  std::ofstream csv(a.out_path);
  if (!csv) throw ConfigError("out: cannot write '" + a.out_path + "'");
  write_csv(csv, records, a.reproducible);
  csv.close();

  manifest.master_seed = o.seed;
  json config_json = o;
  config_json["resolved_scenarios"] = scenarios;
  config_json["output_csv"] = a.out_path;
  config_json["reproducible"] = a.reproducible;
  manifest.config = config_json;
  manifest.finished_at = utc_timestamp();
  const std::string manifest_path =
      a.manifest_path.empty() ? default_manifest_path(a.out_path) : a.manifest_path;
  std::ofstream mf(manifest_path);
  if (!mf) throw ConfigError("manifest: cannot write '" + manifest_path + "'");
  mf << json(manifest).dump(2) << "\n";

  std::size_t violations = 0, cap_hits = 0;
  for (const auto& r : records) {
    violations += r.cost_trace_violations;
    cap_hits += r.iteration_cap_hits;
    out << std::left << std::setw(10) << r.test_name << " M=" << r.m << " T=" << r.t
        << " n=" << r.n << " errors=" << r.errors << "/" << r.trials
        << " error_rate=" << format_double(r.error_rate)
        << " avg_iterations=" << format_double(r.avg_iterations) << "\n";
  }
  if (violations > 0) err << "warning: " << violations << " runs had an increasing cost trace\n";
  if (cap_hits > 0) err << "warning: " << cap_hits << " runs stopped at the iteration cap\n";
  out << "wrote " << a.out_path << " and " << manifest_path << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// analyze

const char* group_name(DivergencePair::Group g) {
  return g == DivergencePair::Group::kTypical ? "typical" : "outlier";
}

json pair_json(const DivergencePair& p) {
  return {{"from", std::string(group_name(p.from_group)) + "[" + std::to_string(p.from) + "]"},
          {"to", std::string(group_name(p.to_group)) + "[" + std::to_string(p.to) + "]"},
          {"value", json_number(p.value)}};
}

std::string pair_text(const DivergencePair& p) {
  std::ostringstream s;
  s << "D(" << group_name(p.from_group) << "[" << p.from << "] || " << group_name(p.to_group)
    << "[" << p.to << "]) = " << format_double(p.value);
  return s.str();
}

json condition_json(const ClusterConditionReport& r) {
  json j{{"holds", r.holds},
         {"max_intra_outlier", pair_json(r.max_intra_outlier)},
         {"max_intra_typical", pair_json(r.max_intra_typical)},
         {"min_cross", pair_json(r.min_cross)}};
  j["violation"] = r.violation ? pair_json(*r.violation) : json(nullptr);
  return j;
}

void print_condition(const ClusterConditionReport& r, std::ostream& out) {
  out << "clustering condition: " << (r.holds ? "holds" : "violated") << "\n";
  out << "  max intra-outlier: " << pair_text(r.max_intra_outlier) << "\n";
  out << "  max intra-typical: " << pair_text(r.max_intra_typical) << "\n";
  out << "  min cross:         " << pair_text(r.min_cross) << "\n";
  if (r.violation) out << "  violating pair:    " << pair_text(*r.violation) << "\n";
}

struct AnalyzeArgs {
  bool json_output = false;
  std::string typicals, outliers;
  std::string p1, p2;
  double step = 0.001;
  std::size_t m = 1000;
  std::string lone_typical;
  std::string set;
  std::string pi, mu, pi2, mu2;
  double exponent_step = 0.0;
  CLI::Option* exponent_step_option = nullptr;
};

int analyze_cluster_condition(const AnalyzeArgs& a, std::ostream& out) {
  const auto typ = parse_pmf_list(a.typicals, "typicals");
  const auto outl = parse_pmf_list(a.outliers, "outliers");
  const auto report = check_cluster_condition(typ, outl);
  if (a.json_output) {
    out << condition_json(report).dump(2) << "\n";
  } else {
    print_condition(report, out);
  }
  return kOk;
}

int analyze_lemma2(const AnalyzeArgs& a, std::ostream& out) {
  const Pmf p1 = parse_pmf(a.p1, "p1");
  const Pmf p2 = parse_pmf(a.p2, "p2");
  const auto r = lemma2_oracle(p1, p2, a.step);
  const double gap = std::abs(r.min_value - r.closed_form);
  const double tv = total_variation(r.argmin, r.closed_form_argmin);
  if (a.json_output) {
    out << json{{"grid_step", a.step},
                {"grid_min", r.min_value},
                {"grid_argmin", pmf_json(r.argmin)},
                {"two_bhattacharyya", r.closed_form},
                {"closed_form_argmin", pmf_json(r.closed_form_argmin)},
                {"gap", gap},
                {"argmin_tv", tv}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "grid step:               " << format_double(a.step) << "\n";
  out << "grid min of D(q||p1)+D(q||p2): " << format_double(r.min_value) << "\n";
  out << "grid argmin:             " << pmf_text(r.argmin) << "\n";
  out << "2 B(p1,p2):              " << format_double(r.closed_form) << "\n";
  out << "geometric-mean argmin:   " << pmf_text(r.closed_form_argmin) << "\n";
  out << "|gap|: " << format_double(gap) << ", argmin TV: " << format_double(tv) << "\n";
  return kOk;
}

int analyze_example1(const AnalyzeArgs& a, std::ostream& out) {
  const Example1Certificate c = a.lone_typical.empty()
                                    ? example1_certificate(a.m)
                                    : example1_certificate_with(parse_pmf(a.lone_typical, "lone-typical"), a.m);
  if (a.json_output) {
    out << json{{"m", c.m},
                {"condition", condition_json(c.condition)},
                {"total_true_split", c.total_true_split},
                {"total_alternative_split", c.total_alternative_split},
                {"difference", c.difference},
                {"alternative_not_worse", c.alternative_not_worse},
                {"certified", c.certified()}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "M = " << c.m << "\n";
  out << "(a) ";
  print_condition(c.condition, out);
  out << "(b) two-cluster cost with q at the generating distributions\n";
  out << "  true split {0,1}:          " << format_double(c.total_true_split) << "\n";
  out << "  alternative split {0,1,2}: " << format_double(c.total_alternative_split) << "\n";
  out << "  difference (true - alt):   " << format_double(c.difference) << "\n";
  out << "  alternative not worse:     " << (c.alternative_not_worse ? "yes" : "no") << "\n";
  out << "certificate: "
      << (c.certified() ? "condition holds and the GL cost cannot separate the splits"
                        : "not certified")
      << "\n";
  return kOk;
}

int analyze_exponent(const AnalyzeArgs& a, std::ostream& out) {
  const Pmf pi = parse_pmf(a.pi, "pi");
  const Pmf mu = parse_pmf(a.mu, "mu");
  std::optional<Pmf> pi2, mu2;
  if (!a.pi2.empty()) pi2 = parse_pmf(a.pi2, "pi2");
  if (!a.mu2.empty()) mu2 = parse_pmf(a.mu2, "mu2");
  const ExponentProblem problem = exponent_preset(a.set, pi, mu, pi2, mu2);
  const double step = a.exponent_step_option->count() > 0
                          ? a.exponent_step
                          : default_exponent_step(problem.targets.size());
  const ExponentEstimate e = estimate_exponent(problem, step);
  const double bound = 2.0 * bhattacharyya(mu, pi);
  if (a.json_output) {
    json minimizer = json::array();
    for (const auto& q : e.minimizer) minimizer.push_back(pmf_json(q));
    out << json{{"set", a.set},
                {"variables", problem.targets.size()},
                {"grid_step", e.grid_step},
                {"estimate", json_number(e.value)},
                {"minimizer", minimizer},
                {"two_bhattacharyya", json_number(bound)},
                {"strict_constraints_relaxed", true}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "constraint set " << a.set << " (" << problem.targets.size()
      << " variables, grid step " << format_double(e.grid_step) << ")\n";
  out << "estimate: " << format_double(e.value) << " nats\n";
  if (!e.minimizer.empty()) {
    out << "minimizer:";
    for (const auto& q : e.minimizer) out << " " << pmf_text(q);
    out << "\n";
  } else {
    out << "minimizer: none (no feasible grid point)\n";
  }
  out << "2 B(mu, pi): " << format_double(bound) << " nats\n";
  out << "note: strict inequalities are evaluated as non-strict on the grid\n";
  return kOk;
}

int analyze_bhatta_bound(const AnalyzeArgs& a, std::ostream& out) {
  const Pmf pi = parse_pmf(a.pi, "pi");
  const auto mus = parse_pmf_list(a.mu, "mu");
  const double bound = bhattacharyya_bound(pi, mus);
  if (a.json_output) {
    out << json{{"bound", json_number(bound)}}.dump(2) << "\n";
  } else {
    out << "min_i 2 B(mu_i, pi) = " << format_double(bound) << " nats\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Detect outlying sequences among categorical sample sequences, run seeded "
               "Monte Carlo experiments, and evaluate divergence bounds.",
               "outlierseq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string());

  DetectArgs detect;
  auto* detect_cmd = app.add_subcommand("detect", "Run one detection test on a sequence CSV file");
  detect_cmd->add_option("input", detect.input, "Sequence CSV: one sequence per row, comma-separated symbols, optional '# alphabet=K' header")
      ->required();
  detect_cmd->add_option("--test", detect.test, "Test: gl-known, gl-unknown, delta2, delta2-1, delta3, delta3-1")
      ->required();
  detect.t_option = detect_cmd->add_option("--t", detect.t, "Number of outliers T (required by gl-known, delta2, delta2-1)");
  detect_cmd->add_option("--probe", detect.probe, "Index of the initial probe sequence (default 0)");
  detect_cmd->add_option("--max-iterations", detect.max_iterations, "Iteration cap for delta2/delta3 (default 100)");
  detect_cmd->add_flag("--allow-large-enumeration", detect.allow_large, "Lift the exhaustive-search caps of the GL tests");
  detect_cmd->add_flag("--json", detect.json_output, "Print a JSON report");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Seeded Monte Carlo experiment; writes a results CSV and a JSON manifest");
  auto reg = [&sim](CLI::Option* o) { sim.options[o->get_name()] = o; return o; };
  sim_cmd->add_option("--preset", sim.preset, "Experiment preset: fig3, fig4, fig5, fig6, fig7");
  sim_cmd->add_option("--config", sim.config_path, "JSON configuration file (keys as in the manifest 'config' object)");
  reg(sim_cmd->add_option("--kind", sim.flags.kind, "Scenario: identical-typical-distinct-outliers, identical-both, two-clusters"));
  reg(sim_cmd->add_option("--alphabet", sim.flags.alphabet, "Alphabet size |Y|"));
  reg(sim_cmd->add_option("--m", sim.flags.m, "Number of sequences M"));
  reg(sim_cmd->add_option("--t", sim.flags.t, "Number of outlying sequences T"));
  reg(sim_cmd->add_option("--n-grid", sim.flags.n_grid, "Comma-separated, strictly increasing sample lengths")->delimiter(','));
  reg(sim_cmd->add_option("--m-grid", sim.flags.m_grid, "Comma-separated M values for an M sweep (T = M / t-divisor)")->delimiter(','));
  reg(sim_cmd->add_option("--t-divisor", sim.flags.t_divisor, "T = M / t-divisor in an M sweep (default 5)"));
  reg(sim_cmd->add_option("--trials", sim.flags.trials, "Monte Carlo trials per grid point"));
  reg(sim_cmd->add_option("--seed", sim.flags.seed, "Master seed (default 0)"));
  reg(sim_cmd->add_option("--tests", sim.flags.tests, "Comma-separated tests to run")->delimiter(','));
  reg(sim_cmd->add_option("--pi", sim.pi_text, "Typical pmf (cluster center for two-clusters), comma-separated; default uniform"));
  reg(sim_cmd->add_option("--mu", sim.mu_text, "Outlier pmf (cluster center for two-clusters); default drawn at random"));
  reg(sim_cmd->add_option("--sigma", sim.flags.sigma, "Noise standard deviation for two-clusters (default 0.01)"));
  reg(sim_cmd->add_option("--min-tv", sim.flags.min_tv, "Minimum total variation of random outliers from the typical pmf (default 0.1)"));
  reg(sim_cmd->add_option("--workers", sim.flags.workers, "Worker threads (results do not depend on this)"));
  reg(sim_cmd->add_option("--max-iterations", sim.flags.max_iterations, "Iteration cap for delta2/delta3 (default 100)"));
  reg(sim_cmd->add_option("--fixed-probe", sim.fixed_probe, "Use this probe index instead of a random one per trial"));
  reg(sim_cmd->add_flag("--allow-large-enumeration", sim.flags.allow_large_enumeration, "Lift the exhaustive-search caps of the GL tests"));
  sim_cmd->add_option("--out", sim.out_path, "Results CSV path")->required();
  sim_cmd->add_option("--manifest", sim.manifest_path, "Manifest path (default: <out>.manifest.json)");
  sim_cmd->add_flag("--reproducible", sim.reproducible, "Write 0 for wall_time_seconds so reruns are byte-identical");

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Verification toolkit for conditions, bounds, and exponents");
  analyze_cmd->require_subcommand(1);
  auto* cc = analyze_cmd->add_subcommand("cluster-condition", "Check the two-cluster separation condition");
  cc->add_option("--typicals", an.typicals, "Typical pmfs, ';'-separated, each comma-separated")->required();
  cc->add_option("--outliers", an.outliers, "Outlier pmfs, ';'-separated, each comma-separated")->required();
  cc->add_flag("--json", an.json_output, "Print a JSON report");
  auto* l2 = analyze_cmd->add_subcommand("lemma2", "Grid-minimize D(q||p1)+D(q||p2) and compare with 2B(p1,p2)");
  l2->add_option("--p1", an.p1, "First full-support pmf (|Y| = 2 or 3)")->required();
  l2->add_option("--p2", an.p2, "Second full-support pmf")->required();
  l2->add_option("--step", an.step, "Grid step, at most 0.01 (default 0.001)");
  l2->add_flag("--json", an.json_output, "Print a JSON report");
  auto* ex1 = analyze_cmd->add_subcommand("example1", "Certificate that the unknown-T GL test fails on clustered distributions");
  ex1->add_option("--m", an.m, "Number of sequences (default 1000, at least 7)");
  ex1->add_option("--lone-typical", an.lone_typical, "Replace the lone typical distribution (index 2)");
  ex1->add_flag("--json", an.json_output, "Print a JSON report");
  auto* ex = analyze_cmd->add_subcommand("exponent", "Grid estimate of a constrained divergence exponent (binary alphabet)");
  ex->add_option("--set", an.set, "Constraint set C1..C10")->required();
  ex->add_option("--pi", an.pi, "Typical pmf, comma-separated (|Y| = 2)")->required();
  ex->add_option("--mu", an.mu, "Outlier pmf, comma-separated (|Y| = 2)")->required();
  ex->add_option("--pi2", an.pi2, "Second typical pmf for C7 and C9");
  ex->add_option("--mu2", an.mu2, "Second outlier pmf for C8 and C10");
  an.exponent_step_option = ex->add_option("--step", an.exponent_step, "Grid step (default 1/200 for 3 variables, 1/64 for 4)");
  ex->add_flag("--json", an.json_output, "Print a JSON report");
  auto* bb = analyze_cmd->add_subcommand("bhatta-bound", "min over outliers of 2B(mu_i, pi)");
  bb->add_option("--pi", an.pi, "Typical pmf, comma-separated")->required();
  bb->add_option("--mu", an.mu, "Outlier pmfs, ';'-separated")->required();
  bb->add_flag("--json", an.json_output, "Print a JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (*detect_cmd) return run_detect(detect, out, err);
    if (*sim_cmd) return run_simulate(sim, out, err);
    if (*cc) return analyze_cluster_condition(an, out);
    if (*l2) return analyze_lemma2(an, out);
    if (*ex1) return analyze_example1(an, out);
    if (*ex) return analyze_exponent(an, out);
    if (*bb) return analyze_bhatta_bound(an, out);
  } catch (const EnumerationRefused& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kFailure;
  } catch (const UnsupportedInput& e) {
    err << "unsupported: " << e.what() << "\n";
    return kFailure;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kFailure;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace outlierseq::cli

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qstrack/metrics.hpp"
#include "qstrack/simulation.hpp"

namespace qstrack {

enum class Algorithm { kKf, kOpg };

std::string algorithm_name(Algorithm a);

struct ExperimentConfig {
  int qubits = 4;
  int window = 40;   // l
  long steps = 1000;  // T
  double noise_std = 1e-3;
  double gamma = 1.0;
  double tau = 1.0;
  std::uint64_t seed = 1;
  std::vector<Algorithm> algorithms = {Algorithm::kKf, Algorithm::kOpg};
  DataMode mode = DataMode::kOracle;
  DynamicsConfig dynamics;
  std::filesystem::path out_dir = "out";
  bool plot = false;
};

// Command-line values that take precedence over file keys.
struct ConfigOverrides {
  std::optional<int> qubits;
  std::optional<int> window;
  std::optional<long> steps;
  std::optional<double> noise_std;
  std::optional<double> gamma;
  std::optional<double> tau;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> algorithm;  // opg | kf | both
  std::optional<std::string> mode;       // oracle | physical
  std::optional<std::string> out;
  std::optional<bool> plot;
};

// Parses flat `key = value` text (# comments, blank lines allowed), applies
// overrides, fills defaults, validates every field. Unknown keys are
// rejected with the offending key named.
ExperimentConfig parse_config(const std::string& file_text,
                              const ConfigOverrides& overrides = {});
ExperimentConfig load_config(const std::optional<std::filesystem::path>& file,
                             const ConfigOverrides& overrides = {});

std::string canonical_config_text(const ExperimentConfig& cfg);
std::string config_hash(const ExperimentConfig& cfg);  // fnv-1a, hex

// Runs the simulation + every enabled estimator over one shared measurement
// realization. Pure in-memory variant of run_experiment; reports come back
// ordered by algorithm name.
std::vector<TrajectoryReport> execute(const ExperimentConfig& cfg);

std::string csv_text(const std::vector<TrajectoryReport>& reports);
void emit_csv(const std::vector<TrajectoryReport>& reports,
              const std::filesystem::path& path);

// Static SVG: x = sampling time, y = normalized distance on a log scale,
// one polyline per algorithm (point markers for single-step series).
std::string svg_text(const std::vector<TrajectoryReport>& reports);
void emit_plot(const std::vector<TrajectoryReport>& reports,
               const std::filesystem::path& path);

// Empirical convergence-order verdict. `half` optionally holds reports from
// an otherwise identical run at half the horizon (needed by the floor and
// residual-growth properties; they are "skipped" without it). Every property
// is a JSON object {status, pass, measured values, thresholds}.
nlohmann::json verdict(const std::vector<TrajectoryReport>& full,
                       const std::vector<TrajectoryReport>& half,
                       const ExperimentConfig& cfg);

bool verdict_all_pass(const nlohmann::json& verdict_map);

struct RunArtifacts {
  std::filesystem::path trajectory_csv;
  std::filesystem::path report_json;
  std::optional<std::filesystem::path> plot_svg;
  nlohmann::json verdict;
};

// Simulate, estimate, and persist trajectory.csv / report.json
// (/ figure1.svg with plot enabled) under cfg.out_dir.
RunArtifacts run_experiment(const ExperimentConfig& cfg);

// run_experiment plus a half-horizon companion run for the floor
// properties; returns 0 iff every evaluated property passes.
int run_verify(const ExperimentConfig& cfg);

}  // namespace qstrack

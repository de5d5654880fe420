// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qstrack/harness.hpp"
#include "qstrack/kf_qse.hpp"
#include "qstrack/opg_admm.hpp"

using namespace qstrack;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("qstrack_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TrajectoryReport synthetic_report(const std::string& algorithm, long T,
                                  const std::function<double(long)>& d,
                                  const std::function<double(long)>& r1,
                                  const std::function<double(long)>& sum_e) {
  TrajectoryReport r;
  r.algorithm = algorithm;
  for (long k = 1; k <= T; ++k) {
    r.k.push_back(k);
    r.d.push_back(d(k));
    r.r1.push_back(r1(k));
    r.r2.push_back(r1(k));
    r.reg.push_back(0.0);
    r.w.push_back(0.0);
    r.sum_e.push_back(sum_e(k));
    r.r1_obj.push_back(r1(k));
  }
  return r;
}

}  // namespace

TEST_CASE("empty config yields the documented defaults") {
  const ExperimentConfig cfg = parse_config("");
  CHECK(cfg.qubits == 4);
  CHECK(cfg.window == 40);
  CHECK(cfg.steps == 1000);
  CHECK(cfg.noise_std == 1e-3);
  CHECK(cfg.gamma == 1.0);
  CHECK(cfg.tau == 1.0);
  CHECK(cfg.mode == DataMode::kOracle);
  CHECK(cfg.algorithms.size() == 2);
  CHECK(cfg.dynamics.observable == "ZIII");
  CHECK(cfg.dynamics.coupling_strength == 0.5);
  CHECK(cfg.dynamics.dt == 0.1);
  CHECK(cfg.dynamics.hamiltonian_seed == cfg.seed);
}

TEST_CASE("config validation names the offending field") {
  CHECK_THROWS_WITH_AS(parse_config("window = 0"),
                       doctest::Contains("must be >= 1"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("bogus_key = 1"),
                       doctest::Contains("bogus_key"), ConfigError);
  CHECK_THROWS_AS(parse_config("qubits = 5"), ConfigError);
  CHECK_THROWS_AS(parse_config("qubits = two"), ConfigError);
  CHECK_THROWS_AS(parse_config("steps = 10\nwindow = 40"), ConfigError);
  CHECK_THROWS_AS(parse_config("mode = sideways"), ConfigError);
  CHECK_THROWS_AS(parse_config("algorithm = simplex"), ConfigError);
  CHECK_THROWS_AS(parse_config("coupling_strength = 0"), ConfigError);
  CHECK_THROWS_AS(parse_config("coupling_strength = 1.5"), ConfigError);
  CHECK_THROWS_AS(parse_config("noise_std = -0.1"), ConfigError);
  CHECK_THROWS_AS(parse_config("observable = QIII"), ConfigError);
  CHECK_THROWS_AS(parse_config("observable = ZI"), ConfigError);  // length 4 needed
  CHECK_THROWS_AS(parse_config("steps"), ConfigError);
}

TEST_CASE("flags take precedence over file keys") {
  ConfigOverrides overrides;
  overrides.steps = 200;
  const ExperimentConfig cfg = parse_config("steps = 100", overrides);
  CHECK(cfg.steps == 200);
}

TEST_CASE("derived defaults follow explicit keys") {
  const ExperimentConfig two = parse_config("qubits = 2");
  CHECK(two.dynamics.observable == "ZI");

  const ExperimentConfig seeded = parse_config("seed = 9");
  CHECK(seeded.dynamics.hamiltonian_seed == 9);

  const ExperimentConfig split = parse_config("seed = 9\nhamiltonian_seed = 4");
  CHECK(split.dynamics.hamiltonian_seed == 4);

  const ExperimentConfig obs = parse_config("qubits = 2\nobservable = XY");
  CHECK(obs.dynamics.observable == "XY");
}

TEST_CASE("config hash distinguishes configs") {
  const ExperimentConfig a = parse_config("");
  const ExperimentConfig b = parse_config("seed = 2");
  CHECK(config_hash(a) == config_hash(parse_config("")));
  CHECK(config_hash(a) != config_hash(b));
  CHECK(canonical_config_text(a) == canonical_config_text(parse_config("")));
}

TEST_CASE("execute produces one report per algorithm with T rows each") {
  const ExperimentConfig cfg =
      parse_config("qubits = 1\nwindow = 5\nsteps = 10\nout = /tmp/unused");
  const auto reports = execute(cfg);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].algorithm == "kf");
  CHECK(reports[1].algorithm == "opg");
  CHECK(reports[0].size() == 10);
  CHECK(reports[1].size() == 10);

  const std::string csv = csv_text(reports);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 21);  // header + 2 * 10
}

TEST_CASE("identical configs reproduce the CSV byte for byte") {
  const ExperimentConfig cfg = parse_config("qubits = 2\nwindow = 8\nsteps = 60");
  const std::string a = csv_text(execute(cfg));
  const std::string b = csv_text(execute(cfg));
  CHECK(a == b);

  ConfigOverrides overrides;
  overrides.seed = 2;
  const std::string c = csv_text(execute(parse_config("qubits = 2\nwindow = 8\nsteps = 60", overrides)));
  CHECK(a != c);
}

TEST_CASE("csv emission") {
  const ExperimentConfig cfg = parse_config(
      "qubits = 1\nwindow = 3\nsteps = 3\nalgorithm = opg");
  const auto reports = execute(cfg);

  SUBCASE("three-step single-algorithm report has four lines") {
    const std::string csv = csv_text(reports);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.rfind("k,algorithm,D,R1,R2,REG,W,sumE,r1_obj\n", 0) == 0);
  }

  SUBCASE("round-trip parse is within 1e-12 relative") {
    std::istringstream in(csv_text(reports));
    std::string line;
    std::getline(in, line);  // header
    std::size_t row = 0;
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::istringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) cells.push_back(cell);
      REQUIRE(cells.size() == 9);
      const auto close_to = [](double parsed, double value) {
        return std::abs(parsed - value) <=
               1e-12 * std::max(1e-300, std::abs(value));
      };
      CHECK(close_to(std::stod(cells[2]), reports[0].d[row]));
      CHECK(close_to(std::stod(cells[3]), reports[0].r1[row]));
      CHECK(close_to(std::stod(cells[5]), reports[0].reg[row]));
      ++row;
    }
    CHECK(row == 3);
  }

  SUBCASE("empty report is rejected before any file is created") {
    const fs::path dir = fresh_dir("csv_empty");
    const fs::path target = dir / "trajectory.csv";
    CHECK_THROWS_AS(emit_csv({}, target), ContractError);
    CHECK(!fs::exists(target));
  }
}

TEST_CASE("estimates at time k ignore later measurements") {
  DynamicsConfig dyn;
  dyn.n = 1;
  dyn.observable = "Z";
  dyn.hamiltonian_seed = 3;
  SimulationRun sim(dyn, DataMode::kPhysical, 6, 1e-3, 3);
  for (int k = 1; k <= 30; ++k) sim.advance();

  MeasurementRecord original = sim.record();
  MeasurementRecord permuted = original;
  std::reverse(permuted.values.begin() + 15, permuted.values.end());

  const auto run_both = [&](const MeasurementRecord& rec) {
    AdmmState admm = initial_admm_state(2);
    KfState kf = initial_kf_state(2);
    const AdmmParams params = derive_params(
        15, ComplexMatrix(*build_window(rec, sim.window_operators(), 15, 6)
                              .sampling_matrix),
        1.0, 1.0);
    for (long k = 1; k <= 15; ++k) {
      const MeasurementWindow w = build_window(rec, sim.window_operators(), k, 6);
      admm = admm_step(admm, w, params);
      kf = kf_step(kf, w);
    }
    return std::make_pair(admm.p, kf.p);
  };

  const auto [admm_a, kf_a] = run_both(original);
  const auto [admm_b, kf_b] = run_both(permuted);
  CHECK(std::memcmp(admm_a.data(), admm_b.data(), sizeof(Complex) * 4) == 0);
  CHECK(std::memcmp(kf_a.data(), kf_b.data(), sizeof(Complex) * 4) == 0);
}

TEST_CASE("svg structure") {
  const auto decay = [](long k) { return 1.0 / double(k); };
  const auto flat = [](long k) { return 0.05 + 0.0 * k; };
  const auto zero = [](long) { return 0.0; };
  const auto r_kf = synthetic_report("kf", 40, flat, zero, zero);
  const auto r_opg = synthetic_report("opg", 40, decay, zero, zero);

  SUBCASE("one polyline per algorithm") {
    const std::string svg = svg_text({r_kf, r_opg});
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
      ++count;
      pos += 9;
    }
    CHECK(count == 2);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("sampling time k") != std::string::npos);
  }

  SUBCASE("y coordinates decrease monotonically in D") {
    const std::string svg = svg_text({r_opg});
    const auto points_start = svg.find("points=\"");
    REQUIRE(points_start != std::string::npos);
    const auto points_end = svg.find('"', points_start + 8);
    std::istringstream pts(svg.substr(points_start + 8, points_end - points_start - 8));
    std::vector<double> ys;
    std::string pair;
    while (pts >> pair) {
      const auto comma = pair.find(',');
      ys.push_back(std::stod(pair.substr(comma + 1)));
    }
    REQUIRE(ys.size() == 40);
    // D decreasing => drawn lower on the log axis => pixel y increases
    CHECK(ys[0] < ys[19]);
    CHECK(ys[19] < ys[39]);
  }

  SUBCASE("single-step series degrades to point markers") {
    const auto single = synthetic_report("kf", 1, flat, zero, zero);
    const std::string svg = svg_text({single});
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
  }
}

TEST_CASE("verdict wiring on synthetic series") {
  ExperimentConfig cfg = parse_config("qubits = 1\nwindow = 5\nsteps = 5");
  cfg.steps = 1000;  // synthetic reports below carry 1000 steps

  const auto opg_d = [](long k) { return 5.0 / double(k); };
  const auto kf_d = [](long k) { return std::max(0.5 / double(k), 0.01); };
  const auto decay_half = [](long k) { return std::pow(double(k), -0.5); };
  const auto linear = [](long k) { return double(k); };
  const auto flat = [](long) { return 1.0; };

  const auto opg = synthetic_report("opg", 1000, opg_d, decay_half, linear);
  const auto kf = synthetic_report("kf", 1000, kf_d, decay_half, linear);
  const auto kf_half = synthetic_report("kf", 500, kf_d, decay_half, linear);

  SUBCASE("decaying series pass") {
    const auto v = verdict({kf, opg}, {kf_half}, cfg);
    CHECK(v.at("opg_r1_order").at("pass") == true);
    CHECK(v.at("opg_r2_order").at("pass") == true);
    CHECK(v.at("opg_distance_order").at("pass") == true);
    CHECK(v.at("kf_early_distance_order").at("pass") == true);
    CHECK(v.at("kf_distance_floor").at("pass") == true);
    CHECK(v.at("kf_residual_growth").at("pass") == true);
    CHECK(v.at("kf_reaches_mark_first").at("k_kf") == 5);
    CHECK(v.at("kf_reaches_mark_first").at("k_opg") == 50);
    CHECK(v.at("kf_reaches_mark_first").at("pass") == true);
    CHECK(v.at("smoothed_crossover").at("pass") == true);
    CHECK(v.at("final_distance_ordering").at("pass") == true);
    CHECK(verdict_all_pass(v));
  }

  SUBCASE("flat series fail the order fits") {
    const auto opg_flat = synthetic_report("opg", 1000, flat, flat, linear);
    const auto v = verdict({kf, opg_flat}, {}, cfg);
    CHECK(v.at("opg_r1_order").at("pass") == false);
    CHECK(std::abs(double(v.at("opg_r1_order").at("slope"))) <= 0.05);
    CHECK(!verdict_all_pass(v));
  }

  SUBCASE("short horizons and missing runs are skipped, not failed") {
    cfg.steps = 100;
    const auto opg_short = synthetic_report("opg", 100, opg_d, decay_half, linear);
    const auto v = verdict({opg_short}, {}, cfg);
    CHECK(v.at("opg_r1_order").at("status") == "skipped");
    CHECK(v.at("kf_early_distance_order").at("status") == "skipped");
    CHECK(v.at("kf_distance_floor").at("status") == "skipped");
    CHECK(v.at("final_distance_ordering").at("status") == "skipped");
    CHECK(verdict_all_pass(v));  // nothing evaluated failed
  }
}

TEST_CASE("run_experiment persists deterministic artifacts") {
  const fs::path dir = fresh_dir("artifacts");
  ConfigOverrides overrides;
  overrides.out = (dir / "a").string();
  ExperimentConfig cfg =
      parse_config("qubits = 1\nwindow = 4\nsteps = 30", overrides);
  cfg.plot = true;

  const RunArtifacts artifacts = run_experiment(cfg);
  CHECK(fs::exists(artifacts.trajectory_csv));
  CHECK(fs::exists(artifacts.report_json));
  REQUIRE(artifacts.plot_svg.has_value());
  CHECK(fs::exists(*artifacts.plot_svg));

  const auto parsed = nlohmann::json::parse(slurp(artifacts.report_json));
  CHECK(parsed.at("config").at("steps") == 30);
  CHECK(parsed.contains("properties"));
  CHECK(parsed.at("summary").contains("opg"));

  ExperimentConfig cfg2 = cfg;
  cfg2.out_dir = dir / "b";
  const RunArtifacts artifacts2 = run_experiment(cfg2);
  CHECK(slurp(artifacts.trajectory_csv) == slurp(artifacts2.trajectory_csv));
}

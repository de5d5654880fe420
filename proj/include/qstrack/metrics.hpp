// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qstrack/linalg.hpp"

namespace qstrack {

// Everything needed to recompute the per-step loss quantities. ADMM logs
// carry e/lambda; KF logs carry the projection residual instead.
struct StepLog {
  long k = 0;
  ComplexVector p;        // estimate after the step
  RealVector e;           // ADMM only
  RealVector lambda;      // ADMM only
  ComplexVector p_star;   // comparator state
  RealVector e_star;      // comparator noise
  RealVector b;           // window record
  std::shared_ptr<const ComplexMatrix> a;  // window sampling matrix
  double projection_residual = 0.0;  // KF only
};

struct StepLogSeries {
  ComplexVector p_initial;  // realized p_0
  std::vector<StepLog> steps;
};

// || rho_star - rho ||_F^2 / || rho_star ||_F^2
double normalized_distance(const DensityMatrix& rho_star, const DensityMatrix& rho);
double normalized_distance(const ComplexVector& p_star, const ComplexVector& p);

// Mean loss of the optimization variables, as printed:
// (1/T) sum_k [ (||p_k|| + ||e_k||^2/(2 gamma)) - (||p*_k|| + ||e*_k||^2/(2 gamma)) ].
double r1(const StepLogSeries& logs, double gamma);
std::vector<double> r1_series(const StepLogSeries& logs, double gamma);

// Same gap evaluated on the step objective ||p - p_{k-1}||^2 + ||e||^2/(2 gamma)
// (the distance-to-previous form; logged alongside r1 for diagnosability).
std::vector<double> r1_objective_series(const StepLogSeries& logs, double gamma);

// Mean constraint violation: (1/T) sum_k ||A_k p_k + e_k - b_k||^2.
double r2(const StepLogSeries& logs);
std::vector<double> r2_series(const StepLogSeries& logs);

// Cumulative tracking regret sum_k [h_k(p_k) - h_k(p*_k)] with
// h_k(p) = ||A_k p - b_k||^2/(2 gamma) + ||p - p_{k-1}||^2; p_{k-1} is the
// realized previous iterate in both terms.
double reg(const StepLogSeries& logs, double gamma);
std::vector<double> reg_series(const StepLogSeries& logs, double gamma);

// W_T = sum_{k>=2} ||p*_k - p*_{k-1}||^2 (comparator path variation).
double path_variation(const StepLogSeries& logs);
std::vector<double> path_variation_series(const StepLogSeries& logs);

// Running sum of the logged projection residuals.
std::vector<double> projection_residual_sum_series(const StepLogSeries& logs);

std::vector<double> distance_series(const StepLogSeries& logs);

// v_k / max_{j<=k} v_j
std::vector<double> running_max_normalized(const std::vector<double>& v);

// Trailing moving average over the given window.
std::vector<double> smoothed(const std::vector<double>& v, int window);

struct FitResult {
  double slope = 0.0;
  double r_squared = 0.0;
  int points_used = 0;
  int points_filtered = 0;  // nonpositive values dropped before the fit
};

// Least-squares slope of log(value) vs log(k) over the trailing fraction of
// the series. Nonpositive values are filtered; fewer than 10 survivors is an
// InsufficientDataError.
FitResult fit_order(const std::vector<double>& k, const std::vector<double>& v,
                    double tail_fraction = 0.5);

// Per-run metric series, one report per algorithm. r1/r2/reg/w/sum_e hold the
// horizon-k values (running means or running sums as defined above), d the
// instantaneous normalized distance.
struct TrajectoryReport {
  std::string algorithm;  // "opg" | "kf"
  std::uint64_t seed = 0;
  std::string config_hash;
  std::vector<long> k;
  std::vector<double> d;
  std::vector<double> r1;
  std::vector<double> r2;
  std::vector<double> reg;
  std::vector<double> w;
  std::vector<double> sum_e;
  std::vector<double> r1_obj;

  std::size_t size() const { return k.size(); }
};

// Assembles a report from logs. For KF logs the e-dependent columns
// (r1, r2, r1_obj) are zero.
TrajectoryReport build_report(const std::string& algorithm,
                              const StepLogSeries& logs, double gamma,
                              std::uint64_t seed, const std::string& config_hash);

}  // namespace qstrack

// SPDX-License-Identifier: Apache-2.0
#include "qstrack/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "qstrack/kernels.hpp"

namespace qstrack {

double normalized_distance(const DensityMatrix& rho_star, const DensityMatrix& rho) {
  if (rho_star.dim() != rho.dim()) {
    throw DimensionError("normalized_distance: dimension mismatch");
  }
  const double denom = rho_star.matrix().squaredNorm();
  if (denom == 0.0) {
    throw NumericError("normalized_distance: zero reference state");
  }
  return (rho_star.matrix() - rho.matrix()).squaredNorm() / denom;
}

double normalized_distance(const ComplexVector& p_star, const ComplexVector& p) {
  if (p_star.size() != p.size()) {
    throw DimensionError("normalized_distance: dimension mismatch");
  }
  const double denom = p_star.squaredNorm();
  if (denom == 0.0) {
    throw NumericError("normalized_distance: zero reference state");
  }
  return (p_star - p).squaredNorm() / denom;
}

namespace {

void require_noise_fields(const StepLogSeries& logs, const char* what) {
  for (const auto& s : logs.steps) {
    if (s.e.size() == 0 || s.e_star.size() == 0) {
      throw ContractError(std::string(what) +
                          ": logs are missing e fields (not ADMM logs?)");
    }
  }
}

void require_window_refs(const StepLogSeries& logs, const char* what) {
  for (const auto& s : logs.steps) {
    if (!s.a || s.b.size() == 0) {
      throw ContractError(std::string(what) + ": logs are missing window refs");
    }
  }
}

double constraint_residual_sq(const StepLog& s) {
  const ComplexVector r = kernels::matvec(*s.a, s.p) +
                          (s.e - s.b).cast<Complex>();
  return r.squaredNorm();
}

}  // namespace

std::vector<double> r1_series(const StepLogSeries& logs, double gamma) {
  if (logs.steps.empty()) throw ContractError("r1: empty log series");
  require_noise_fields(logs, "r1");
  const double inv2g = 1.0 / (2.0 * gamma);
  std::vector<double> out;
  out.reserve(logs.steps.size());
  double acc = 0.0;
  long t = 0;
  for (const auto& s : logs.steps) {
    acc += (s.p.norm() + inv2g * s.e.squaredNorm()) -
           (s.p_star.norm() + inv2g * s.e_star.squaredNorm());
    ++t;
    out.push_back(acc / double(t));
  }
  return out;
}

double r1(const StepLogSeries& logs, double gamma) {
  return r1_series(logs, gamma).back();
}

std::vector<double> r1_objective_series(const StepLogSeries& logs, double gamma) {
  if (logs.steps.empty()) throw ContractError("r1_objective: empty log series");
  require_noise_fields(logs, "r1_objective");
  const double inv2g = 1.0 / (2.0 * gamma);
  std::vector<double> out;
  out.reserve(logs.steps.size());
  double acc = 0.0;
  long t = 0;
  const ComplexVector* prev = &logs.p_initial;
  for (const auto& s : logs.steps) {
    acc += ((s.p - *prev).squaredNorm() + inv2g * s.e.squaredNorm()) -
           ((s.p_star - *prev).squaredNorm() + inv2g * s.e_star.squaredNorm());
    ++t;
    out.push_back(acc / double(t));
    prev = &s.p;
  }
  return out;
}

std::vector<double> r2_series(const StepLogSeries& logs) {
  if (logs.steps.empty()) throw ContractError("r2: empty log series");
  require_noise_fields(logs, "r2");
  require_window_refs(logs, "r2");
  std::vector<double> out;
  out.reserve(logs.steps.size());
  double acc = 0.0;
  long t = 0;
  for (const auto& s : logs.steps) {
    acc += constraint_residual_sq(s);
    ++t;
    out.push_back(acc / double(t));
  }
  return out;
}

double r2(const StepLogSeries& logs) { return r2_series(logs).back(); }

namespace {

double h_of(const StepLog& s, const ComplexVector& p, const ComplexVector& prev,
            double gamma) {
  const double data_term =
      (kernels::matvec(*s.a, p) - s.b.cast<Complex>()).squaredNorm();
  return data_term / (2.0 * gamma) + (p - prev).squaredNorm();
}

}  // namespace

std::vector<double> reg_series(const StepLogSeries& logs, double gamma) {
  if (logs.steps.empty()) throw ContractError("reg: empty log series");
  require_window_refs(logs, "reg");
  std::vector<double> out;
  out.reserve(logs.steps.size());
  double acc = 0.0;
  const ComplexVector* prev = &logs.p_initial;
  for (const auto& s : logs.steps) {
    acc += h_of(s, s.p, *prev, gamma) - h_of(s, s.p_star, *prev, gamma);
    out.push_back(acc);
    prev = &s.p;
  }
  return out;
}

double reg(const StepLogSeries& logs, double gamma) {
  return reg_series(logs, gamma).back();
}

std::vector<double> path_variation_series(const StepLogSeries& logs) {
  std::vector<double> out;
  out.reserve(logs.steps.size());
  double acc = 0.0;
  const ComplexVector* prev = nullptr;
  for (const auto& s : logs.steps) {
    if (prev) acc += (s.p_star - *prev).squaredNorm();
    out.push_back(acc);
    prev = &s.p_star;
  }
  return out;
}

double path_variation(const StepLogSeries& logs) {
  auto series = path_variation_series(logs);
  return series.empty() ? 0.0 : series.back();
}

std::vector<double> projection_residual_sum_series(const StepLogSeries& logs) {
  std::vector<double> out;
  out.reserve(logs.steps.size());
  double acc = 0.0;
  for (const auto& s : logs.steps) {
    acc += s.projection_residual;
    out.push_back(acc);
  }
  return out;
}

std::vector<double> distance_series(const StepLogSeries& logs) {
  std::vector<double> out;
  out.reserve(logs.steps.size());
  for (const auto& s : logs.steps) {
    out.push_back(normalized_distance(s.p_star, s.p));
  }
  return out;
}

std::vector<double> running_max_normalized(const std::vector<double>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  double running = 0.0;
  for (double x : v) {
    running = std::max(running, x);
    out.push_back(running > 0.0 ? x / running : 0.0);
  }
  return out;
}

std::vector<double> smoothed(const std::vector<double>& v, int window) {
  if (window < 1) throw ContractError("smoothed: window must be >= 1");
  std::vector<double> out;
  out.reserve(v.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += v[i];
    if (i >= std::size_t(window)) acc -= v[i - std::size_t(window)];
    const auto n = std::min<std::size_t>(i + 1, std::size_t(window));
    out.push_back(acc / double(n));
  }
  return out;
}

FitResult fit_order(const std::vector<double>& k, const std::vector<double>& v,
                    double tail_fraction) {
  if (k.size() != v.size()) throw DimensionError("fit_order: length mismatch");
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) {
    throw ConfigError("fit_order: tail fraction must be in (0, 1]");
  }
  const std::size_t n = k.size();
  const std::size_t start = n - std::size_t(std::ceil(double(n) * tail_fraction));

  std::vector<double> lx, ly;
  int filtered = 0;
  for (std::size_t i = start; i < n; ++i) {
    if (!(v[i] > 0.0) || !(k[i] > 0.0)) {
      ++filtered;
      continue;
    }
    lx.push_back(std::log(k[i]));
    ly.push_back(std::log(v[i]));
  }
  if (filtered > 0) {
    std::cerr << "fit_order: filtered " << filtered
              << " nonpositive values before fitting\n";
  }
  if (lx.size() < 10) {
    throw InsufficientDataError("fit_order: fewer than 10 usable points");
  }

  const double nn = double(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= nn;
  my /= nn;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double dx = lx[i] - mx;
    const double dy = ly[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  FitResult fit;
  fit.points_used = int(lx.size());
  fit.points_filtered = filtered;
  if (sxx == 0.0) {
    throw InsufficientDataError("fit_order: degenerate abscissa");
  }
  fit.slope = sxy / sxx;
  const double ss_res = syy - fit.slope * sxy;
  fit.r_squared = (syy <= 1e-30) ? 1.0 : std::max(0.0, 1.0 - ss_res / syy);
  return fit;
}

TrajectoryReport build_report(const std::string& algorithm,
                              const StepLogSeries& logs, double gamma,
                              std::uint64_t seed, const std::string& config_hash) {
  TrajectoryReport report;
  report.algorithm = algorithm;
  report.seed = seed;
  report.config_hash = config_hash;
  report.k.reserve(logs.steps.size());
  for (const auto& s : logs.steps) report.k.push_back(s.k);

  report.d = distance_series(logs);
  report.reg = reg_series(logs, gamma);
  report.w = path_variation_series(logs);
  report.sum_e = projection_residual_sum_series(logs);

  const bool has_noise_estimate =
      !logs.steps.empty() && logs.steps.front().e.size() > 0;
  if (has_noise_estimate) {
    report.r1 = r1_series(logs, gamma);
    report.r2 = r2_series(logs);
    report.r1_obj = r1_objective_series(logs, gamma);
  } else {
    report.r1.assign(logs.steps.size(), 0.0);
    report.r2.assign(logs.steps.size(), 0.0);
    report.r1_obj.assign(logs.steps.size(), 0.0);
  }
  return report;
}

}  // namespace qstrack

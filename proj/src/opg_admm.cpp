// SPDX-License-Identifier: Apache-2.0
#include "qstrack/opg_admm.hpp"

#include <cmath>
#include <iostream>

#include "qstrack/kernels.hpp"
#include "qstrack/projection.hpp"

namespace qstrack {

namespace {

// Top eigenvalue of A^dag A, computed on the smaller Gram side.
double gram_top_eigenvalue(const ComplexMatrix& a) {
  const ComplexMatrix gram = (a.rows() <= a.cols())
                                 ? kernels::matmul_adjoint_right(a, a)
                                 : kernels::matmul_adjoint_left(a, a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericError("gram eigenvalues: decomposition failed");
  }
  return std::max(0.0, es.eigenvalues().maxCoeff());
}

RealVector padded(const RealVector& v, Eigen::Index len) {
  if (v.size() == len) return v;
  RealVector out = RealVector::Zero(len);
  out.head(v.size()) = v;
  return out;
}

void check_window_dims(const AdmmState& state, const MeasurementWindow& window) {
  if (!window.sampling_matrix) {
    throw DimensionError("opg-admm: window has no sampling matrix");
  }
  if (window.sampling_matrix->cols() != state.p.size()) {
    throw DimensionError("opg-admm: window and state dimensions differ");
  }
  if (window.rows() < state.e.size() || window.rows() < state.lambda.size()) {
    throw DimensionError("opg-admm: window shorter than carried e/lambda");
  }
}

}  // namespace

AdmmParams derive_params(long horizon, const ComplexMatrix& a_ref, double tau,
                         double gamma) {
  if (horizon < 1) throw ConfigError("derive_params: horizon must be >= 1");
  if (!(tau > 0.0)) throw ConfigError("derive_params: tau must be > 0");
  if (!(gamma > 0.0)) throw ConfigError("derive_params: gamma must be > 0");
  if (a_ref.size() == 0) throw ConfigError("derive_params: empty sampling matrix");

  AdmmParams params;
  params.horizon = horizon;
  params.gamma = gamma;
  params.tau = tau;
  params.alpha = std::sqrt(double(horizon));
  params.sigma_m = gram_top_eigenvalue(a_ref);
  if (params.sigma_m <= 0.0) {
    throw ConfigError("derive_params: degenerate sampling matrix (sigma_m = 0)");
  }
  params.eta = tau / (params.alpha * params.sigma_m);

  const double min_eig = proximal_metric_min_eigenvalue(params, a_ref);
  if (min_eig < -1e-9 * tau) {
    throw ConfigError("derive_params: proximal metric is not PSD");
  }
  if (min_eig < -1e-12 * tau) {
    std::cerr << "opg-admm: proximal metric minimum eigenvalue " << min_eig
              << " is only semidefinite\n";
  }
  return params;
}

double proximal_metric_min_eigenvalue(const AdmmParams& params,
                                      const ComplexMatrix& a) {
  // tau I - alpha eta A^dag A is smallest along the top Gram direction.
  return params.tau - params.alpha * params.eta * gram_top_eigenvalue(a);
}

AdmmState initial_admm_state(Eigen::Index d) {
  AdmmState state;
  state.p = vec(ComplexMatrix(ComplexMatrix::Identity(d, d) / double(d)));
  state.e = RealVector();
  state.lambda = RealVector();
  state.k = 0;
  return state;
}

ComplexVector rho_update(const AdmmState& state, const MeasurementWindow& window,
                         const AdmmParams& params) {
  check_window_dims(state, window);
  const ComplexMatrix& a = *window.sampling_matrix;
  const Eigen::Index l_eff = window.rows();
  const RealVector e = padded(state.e, l_eff);
  const RealVector lambda = padded(state.lambda, l_eff);

  const RealVector residual = kernels::matvec(a, state.p).real() + e -
                              window.record - lambda / params.alpha;
  // alpha / tau_1 with tau_1 = tau/eta
  const double scale = params.alpha * params.eta / params.tau;
  const ComplexVector p_tilde =
      state.p - scale * kernels::matvec_adjoint(a, residual.cast<Complex>());
  return vec(project_to_density(unvec(p_tilde)).matrix());
}

RealVector e_update(const ComplexVector& p_new, const AdmmState& state,
                    const MeasurementWindow& window, const AdmmParams& params) {
  check_window_dims(state, window);
  const ComplexMatrix& a = *window.sampling_matrix;
  const RealVector lambda = padded(state.lambda, window.rows());
  const double coef = params.alpha * params.gamma / (1.0 + params.alpha * params.gamma);
  return coef * (window.record + lambda / params.alpha -
                 kernels::matvec(a, p_new).real());
}

RealVector dual_update(const ComplexVector& p_new, const RealVector& e_new,
                       const AdmmState& state, const MeasurementWindow& window,
                       const AdmmParams& params) {
  check_window_dims(state, window);
  const ComplexMatrix& a = *window.sampling_matrix;
  const RealVector lambda = padded(state.lambda, window.rows());
  return lambda - params.alpha * (kernels::matvec(a, p_new).real() + e_new -
                                  window.record);
}

AdmmState admm_step(const AdmmState& state, const MeasurementWindow& window,
                    const AdmmParams& params) {
  if (window.time != state.k + 1) {
    throw ContractError("admm_step: window time must equal state.k + 1");
  }
  AdmmState next;
  next.p = rho_update(state, window, params);
  next.e = e_update(next.p, state, window, params);
  next.lambda = dual_update(next.p, next.e, state, window, params);
  next.k = state.k + 1;
  return next;
}

}  // namespace qstrack

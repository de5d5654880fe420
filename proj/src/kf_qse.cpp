// SPDX-License-Identifier: Apache-2.0
#include "qstrack/kf_qse.hpp"

#include <utility>

#include "qstrack/kernels.hpp"
#include "qstrack/projection.hpp"

namespace qstrack {

namespace {

constexpr double kConditionLimit = 1e12;
constexpr double kResidualTol = 1e-10;

ComplexMatrix gram_plus_identity(const ComplexMatrix& a) {
  ComplexMatrix g = kernels::matmul_adjoint_right(a, a);
  g += ComplexMatrix::Identity(a.rows(), a.rows());
  return g;
}

}  // namespace

KfState initial_kf_state(Eigen::Index d) {
  KfState state;
  state.p = vec(ComplexMatrix(ComplexMatrix::Identity(d, d) / double(d)));
  return state;
}

ComplexMatrix kalman_gain(const ComplexMatrix& a) {
  if (!a.allFinite()) throw NumericError("kalman_gain: non-finite entries");
  const ComplexMatrix g = gram_plus_identity(a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g);
  if (es.info() != Eigen::Success) {
    throw NumericError("kalman_gain: eigendecomposition failed");
  }
  const RealVector& w = es.eigenvalues();  // >= 1 up to rounding
  if (w.minCoeff() <= 0.0 || w.maxCoeff() / w.minCoeff() > kConditionLimit) {
    throw NumericError("kalman_gain: Gram system ill-conditioned");
  }
  // K^dag = (I + A A^dag)^{-1} A via the spectral factorization.
  const ComplexMatrix inv_sandwich =
      es.eigenvectors() *
      ComplexMatrix(w.cwiseInverse().asDiagonal() * es.eigenvectors().adjoint());
  const ComplexMatrix k_dag = kernels::matmul(inv_sandwich, a);

  const double residual = (kernels::matmul(g, k_dag) - a).norm();
  if (residual > kResidualTol * a.norm()) {
    throw NumericError("kalman_gain: defining identity residual too large");
  }
  return k_dag.adjoint();
}

double gain_identity_residual(const ComplexMatrix& a, const ComplexMatrix& gain) {
  const ComplexMatrix g = gram_plus_identity(a);
  return (kernels::matmul(g, ComplexMatrix(gain.adjoint())) - a).norm();
}

ComplexVector kf_descend(const KfState& state, const MeasurementWindow& window) {
  return kf_descend(state, window, kalman_gain(*window.sampling_matrix));
}

ComplexVector kf_descend(const KfState& state, const MeasurementWindow& window,
                         const ComplexMatrix& gain) {
  const ComplexMatrix& a = *window.sampling_matrix;
  if (a.cols() != state.p.size()) {
    throw DimensionError("kf_descend: window and state dimensions differ");
  }
  const ComplexVector innovation =
      kernels::matvec(a, state.p) - window.record.cast<Complex>();
  return state.p - kernels::matvec(gain, innovation);
}

std::pair<ComplexVector, double> kf_project(const ComplexVector& p_hat) {
  ComplexVector p = vec(project_to_density(unvec(p_hat)).matrix());
  const double residual = (p - p_hat).norm();
  return {std::move(p), residual};
}

const ComplexMatrix& KalmanGainCache::get(const MeasurementWindow& window) {
  if (window.sampling_matrix.get() != key_) {
    gain_ = kalman_gain(*window.sampling_matrix);
    key_ = window.sampling_matrix.get();
    keep_alive_ = window.sampling_matrix;
  }
  return gain_;
}

KfState kf_step(const KfState& state, const MeasurementWindow& window) {
  KalmanGainCache cache;
  return kf_step(state, window, cache);
}

KfState kf_step(const KfState& state, const MeasurementWindow& window,
                KalmanGainCache& cache) {
  if (window.time != state.k + 1) {
    throw ContractError("kf_step: window time must equal state.k + 1");
  }
  const ComplexVector p_hat = kf_descend(state, window, cache.get(window));
  auto [p, residual] = kf_project(p_hat);
  KfState next;
  next.p = std::move(p);
  next.k = state.k + 1;
  next.last_projection_residual = residual;
  return next;
}

}  // namespace qstrack

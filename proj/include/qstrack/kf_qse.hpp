// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qstrack/simulation.hpp"

namespace qstrack {

struct KfState {
  ComplexVector p;  // vec of the current density-matrix estimate
  long k = 0;
  double last_projection_residual = 0.0;  // ||p_k - p_hat_k||_2
};

KfState initial_kf_state(Eigen::Index d);

// K = A^dag (I + A A^dag)^{-1}, computed by eigendecomposing the small
// l_eff x l_eff Gram system rather than forming an explicit inverse.
// Throws NumericError when the Gram system is ill-conditioned (cond > 1e12)
// or the defining residual ||(I + A A^dag) K^dag - A||_F exceeds
// 1e-10 ||A||_F.
ComplexMatrix kalman_gain(const ComplexMatrix& a);

// ||(I + A A^dag) K^dag - A||_F (diagnostic used by tests).
double gain_identity_residual(const ComplexMatrix& a, const ComplexMatrix& gain);

// p_hat = p_{k-1} - K (A p_{k-1} - b)
ComplexVector kf_descend(const KfState& state, const MeasurementWindow& window);
ComplexVector kf_descend(const KfState& state, const MeasurementWindow& window,
                         const ComplexMatrix& gain);

// Projection onto the density set plus the correction norm ||p - p_hat||_2.
std::pair<ComplexVector, double> kf_project(const ComplexVector& p_hat);

// Memoizes the gain for a repeated sampling matrix (the window matrix is
// shared and constant once k >= l).
class KalmanGainCache {
 public:
  const ComplexMatrix& get(const MeasurementWindow& window);

 private:
  const ComplexMatrix* key_ = nullptr;
  std::shared_ptr<const ComplexMatrix> keep_alive_;
  ComplexMatrix gain_;
};

// One descend+project step at window time state.k + 1.
KfState kf_step(const KfState& state, const MeasurementWindow& window);
KfState kf_step(const KfState& state, const MeasurementWindow& window,
                KalmanGainCache& cache);

}  // namespace qstrack

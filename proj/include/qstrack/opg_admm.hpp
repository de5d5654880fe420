// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qstrack/simulation.hpp"

namespace qstrack {

// Parameter set for the online proximal-gradient ADMM estimator.
// The selection rule ties them together: alpha = sqrt(horizon),
// sigma_m = lambda_max(A^dag A) of the reference sampling matrix,
// eta = tau / (alpha sigma_m). Under that rule the proximal metric
// P_k = tau I - alpha eta A_k^dag A_k is positive semidefinite for the
// reference window and every row-subset of it.
struct AdmmParams {
  double alpha = 1.0;
  double eta = 1.0;
  double gamma = 1.0;
  double tau = 1.0;
  double sigma_m = 1.0;
  long horizon = 1;
};

AdmmParams derive_params(long horizon, const ComplexMatrix& a_ref, double tau,
                         double gamma);

// Smallest eigenvalue of tau I - alpha eta A^dag A (diagnostic for the
// positive-semidefiniteness of the proximal metric).
double proximal_metric_min_eigenvalue(const AdmmParams& params,
                                      const ComplexMatrix& a);

// Iterate triple. e and lambda grow with the window during the first l
// steps; new entries are zero-padded at the newest position, which keeps the
// lambda_1 = 0 initialization semantics for rows not seen before.
struct AdmmState {
  ComplexVector p;    // vec of the current density-matrix estimate
  RealVector e;       // noise estimate, length l_eff
  RealVector lambda;  // dual variable, length l_eff
  long k = 0;
};

// p = vec(I/d), empty e and lambda, k = 0.
AdmmState initial_admm_state(Eigen::Index d);

// Gradient step on the augmented-Lagrangian rho-subproblem followed by
// projection onto the density set. The step scale is alpha/tau_1 with
// tau_1 = tau/eta (= alpha sigma_m under the selection rule).
ComplexVector rho_update(const AdmmState& state, const MeasurementWindow& window,
                         const AdmmParams& params);

// Closed-form minimizer of the strongly convex e-subproblem:
// e = (alpha gamma / (1 + alpha gamma)) (b + lambda/alpha - Re(A p)).
RealVector e_update(const ComplexVector& p_new, const AdmmState& state,
                    const MeasurementWindow& window, const AdmmParams& params);

// lambda_k = lambda_{k-1} - alpha (Re(A p_k) + e_k - b_k)
RealVector dual_update(const ComplexVector& p_new, const RealVector& e_new,
                       const AdmmState& state, const MeasurementWindow& window,
                       const AdmmParams& params);

// One full cross-update (rho, e, dual) at window time state.k + 1.
AdmmState admm_step(const AdmmState& state, const MeasurementWindow& window,
                    const AdmmParams& params);

}  // namespace qstrack

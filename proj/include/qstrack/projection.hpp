// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qstrack/linalg.hpp"

namespace qstrack {

// Euclidean projection onto the probability simplex {x : x_i >= 0, sum = 1}.
// Closed form via the sorted-threshold construction; O(m log m).
RealVector simplex_project(const RealVector& v);

// Nearest density matrix to the Hermitian part of h in Frobenius norm:
// eigendecompose (h + h^dag)/2 and project the eigenvalue vector onto the
// simplex. This is the exact minimizer of || rho - (h + h^dag)/2 ||_F^2
// over the density-matrix set; with degenerate eigenvalues any orthonormal
// eigenbasis yields the same projected matrix, so no tie-breaking is needed.
DensityMatrix project_to_density(const ComplexMatrix& h);

}  // namespace qstrack

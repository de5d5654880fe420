// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "qstrack/errors.hpp"

namespace qstrack {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Column-stacking vectorization: vec(m)[i + j*d] = m(i, j). With this
// convention tr(M^dag rho) == vec(M)^dag vec(rho) under the standard
// inner product.
ComplexVector vec(const ComplexMatrix& m);

// Inverse of vec; the input length must be a perfect square.
ComplexMatrix unvec(const ComplexVector& v);

// Tensor (Kronecker) product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix hermitian_part(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

// ||m - m^dag||_F
double hermiticity_defect(const ComplexMatrix& m);

// Single-qubit Pauli matrix; label must be one of I, X, Y, Z.
ComplexMatrix pauli(char label);

// Tensor product of single-qubit Paulis; labels[0] is the leftmost factor.
ComplexMatrix pauli_observable(std::string_view labels);
ComplexMatrix pauli_observable(int n, std::string_view labels);

// Hermitian, unit-trace, positive semidefinite matrix. `validated` runs a
// full invariant check (including an eigendecomposition); `trusted` is for
// construction paths that guarantee the invariants structurally (channel
// evolution, projection output).
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-10;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kEigenvalueTol = 1e-10;  // min eigenvalue >= -tol

  static DensityMatrix validated(ComplexMatrix m);
  static DensityMatrix trusted(ComplexMatrix m);
  static DensityMatrix maximally_mixed(Eigen::Index d);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

}  // namespace qstrack

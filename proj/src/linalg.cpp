// SPDX-License-Identifier: Apache-2.0
#include "qstrack/linalg.hpp"

#include <cmath>
#include <string>

#include "qstrack/kernels.hpp"

namespace qstrack {

ComplexVector vec(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("vec: input must be square, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvec(const ComplexVector& v) {
  const auto n = v.size();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(n))));
  if (d * d != n) {
    throw DimensionError("unvec: length " + std::to_string(n) +
                         " is not a perfect square");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return kernels::kron(a, b);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - ComplexMatrix(m.adjoint())).norm();
}

ComplexMatrix pauli(char label) {
  ComplexMatrix p(2, 2);
  const Complex i(0.0, 1.0);
  switch (label) {
    case 'I': p << 1, 0, 0, 1; break;
    case 'X': p << 0, 1, 1, 0; break;
    case 'Y': p << 0, -i, i, 0; break;
    case 'Z': p << 1, 0, 0, -1; break;
    default:
      throw ConfigError(std::string("pauli: unknown label '") + label +
                        "' (expected one of I, X, Y, Z)");
  }
  return p;
}

ComplexMatrix pauli_observable(std::string_view labels) {
  if (labels.empty()) throw ConfigError("pauli_observable: empty label list");
  ComplexMatrix out = pauli(labels[0]);
  for (std::size_t q = 1; q < labels.size(); ++q) {
    out = kron(out, pauli(labels[q]));
  }
  return out;
}

ComplexMatrix pauli_observable(int n, std::string_view labels) {
  if (n <= 0 || labels.size() != static_cast<std::size_t>(n)) {
    throw ConfigError("pauli_observable: label list length " +
                      std::to_string(labels.size()) + " does not match n = " +
                      std::to_string(n));
  }
  return pauli_observable(labels);
}

DensityMatrix DensityMatrix::validated(ComplexMatrix m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("DensityMatrix: matrix must be square");
  }
  if (!m.allFinite()) throw NumericError("DensityMatrix: non-finite entries");
  if (hermiticity_defect(m) > kHermitianTol) {
    throw NumericError("DensityMatrix: not Hermitian within tolerance");
  }
  if (std::abs(m.trace().real() - 1.0) > kTraceTol ||
      std::abs(m.trace().imag()) > kTraceTol) {
    throw NumericError("DensityMatrix: trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(m),
                                                  Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericError("DensityMatrix: eigendecomposition failed");
  }
  if (es.eigenvalues().minCoeff() < -kEigenvalueTol) {
    throw NumericError("DensityMatrix: negative eigenvalue beyond tolerance");
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
  if (!m.allFinite()) throw NumericError("DensityMatrix: non-finite entries");
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index d) {
  return DensityMatrix(ComplexMatrix::Identity(d, d) / double(d));
}

}  // namespace qstrack

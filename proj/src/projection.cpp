// SPDX-License-Identifier: Apache-2.0
#include "qstrack/projection.hpp"

#include <algorithm>
#include <vector>

namespace qstrack {

RealVector simplex_project(const RealVector& v) {
  const auto m = v.size();
  if (m == 0) throw DimensionError("simplex_project: empty vector");
  if (!v.allFinite()) throw NumericError("simplex_project: non-finite entries");

  std::vector<double> u(v.data(), v.data() + m);
  std::sort(u.begin(), u.end(), std::greater<double>());

  // Largest j with u_j - (sum_{i<=j} u_i - 1)/j > 0; theta from that prefix.
  double prefix = 0.0;
  double theta = 0.0;
  for (Eigen::Index j = 0; j < m; ++j) {
    prefix += u[j];
    const double candidate = (prefix - 1.0) / double(j + 1);
    if (u[j] - candidate > 0.0) {
      theta = candidate;
    }
  }
  return (v.array() - theta).max(0.0);
}

DensityMatrix project_to_density(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw DimensionError("project_to_density: input must be square");
  }
  if (!h.allFinite()) {
    throw NumericError("project_to_density: non-finite entries");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(h));
  if (es.info() != Eigen::Success) {
    throw NumericError("project_to_density: eigendecomposition failed");
  }
  const RealVector w = simplex_project(es.eigenvalues());
  ComplexMatrix rho =
      es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix::trusted(std::move(rho));
}

}  // namespace qstrack

// SPDX-License-Identifier: Apache-2.0
#include "qstrack/kernels.hpp"

#ifdef QSTRACK_HAS_OPENMP
#include <omp.h>
#endif

namespace qstrack::kernels {

namespace {

void check_inner(Eigen::Index a_cols, Eigen::Index b_rows, const char* what) {
  if (a_cols != b_rows) {
    throw DimensionError(std::string(what) + ": inner dimensions " +
                         std::to_string(a_cols) + " and " +
                         std::to_string(b_rows) + " do not match");
  }
}

// Per-column accumulation used by both variants so results match bit for bit.
inline void matmul_column(ComplexMatrix& c, const ComplexMatrix& a,
                          const ComplexMatrix& b, Eigen::Index j) {
  c.col(j).setZero();
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    c.col(j) += a.col(k) * b(k, j);
  }
}

inline void matmul_adj_left_column(ComplexMatrix& c, const ComplexMatrix& a,
                                   const ComplexMatrix& b, Eigen::Index j) {
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    c(i, j) = a.col(i).dot(b.col(j));  // dot conjugates the left factor
  }
}

inline void matmul_adj_right_column(ComplexMatrix& c, const ComplexMatrix& a,
                                    const ComplexMatrix& b, Eigen::Index j) {
  c.col(j).setZero();
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    c.col(j) += a.col(k) * std::conj(b(j, k));
  }
}

inline void kron_block(ComplexMatrix& c, const ComplexMatrix& a,
                       const ComplexMatrix& b, Eigen::Index aj) {
  for (Eigen::Index ai = 0; ai < a.rows(); ++ai) {
    c.block(ai * b.rows(), aj * b.cols(), b.rows(), b.cols()) = a(ai, aj) * b;
  }
}

inline Complex matvec_row(const ComplexMatrix& a, const ComplexVector& x,
                          Eigen::Index i) {
  Complex acc(0.0, 0.0);
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    acc += a(i, k) * x(k);
  }
  return acc;
}

std::size_t work(Eigen::Index m, Eigen::Index n, Eigen::Index k) {
  return std::size_t(m) * std::size_t(n) * std::size_t(k);
}

}  // namespace

bool openmp_enabled() {
#ifdef QSTRACK_HAS_OPENMP
  return true;
#else
  return false;
#endif
}

namespace serial {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_inner(a.cols(), b.rows(), "matmul");
  ComplexMatrix c(a.rows(), b.cols());
  for (Eigen::Index j = 0; j < c.cols(); ++j) matmul_column(c, a, b, j);
  return c;
}

ComplexMatrix matmul_adjoint_left(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_inner(a.rows(), b.rows(), "matmul_adjoint_left");
  ComplexMatrix c(a.cols(), b.cols());
  for (Eigen::Index j = 0; j < c.cols(); ++j) matmul_adj_left_column(c, a, b, j);
  return c;
}

ComplexMatrix matmul_adjoint_right(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_inner(a.cols(), b.cols(), "matmul_adjoint_right");
  ComplexMatrix c(a.rows(), b.rows());
  for (Eigen::Index j = 0; j < c.cols(); ++j) matmul_adj_right_column(c, a, b, j);
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index aj = 0; aj < a.cols(); ++aj) kron_block(c, a, b, aj);
  return c;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
  check_inner(a.cols(), x.size(), "matvec");
  ComplexVector y(a.rows());
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = matvec_row(a, x, i);
  return y;
}

ComplexVector matvec_adjoint(const ComplexMatrix& a, const ComplexVector& x) {
  check_inner(a.rows(), x.size(), "matvec_adjoint");
  ComplexVector y(a.cols());
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = a.col(i).dot(x);
  return y;
}

}  // namespace serial

namespace par {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_inner(a.cols(), b.rows(), "matmul");
  ComplexMatrix c(a.rows(), b.cols());
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < c.cols(); ++j) matmul_column(c, a, b, j);
  return c;
}

ComplexMatrix matmul_adjoint_left(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_inner(a.rows(), b.rows(), "matmul_adjoint_left");
  ComplexMatrix c(a.cols(), b.cols());
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < c.cols(); ++j) matmul_adj_left_column(c, a, b, j);
  return c;
}

ComplexMatrix matmul_adjoint_right(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_inner(a.cols(), b.cols(), "matmul_adjoint_right");
  ComplexMatrix c(a.rows(), b.rows());
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < c.cols(); ++j) matmul_adj_right_column(c, a, b, j);
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
#pragma omp parallel for schedule(static)
  for (Eigen::Index aj = 0; aj < a.cols(); ++aj) kron_block(c, a, b, aj);
  return c;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
  check_inner(a.cols(), x.size(), "matvec");
  ComplexVector y(a.rows());
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = matvec_row(a, x, i);
  return y;
}

ComplexVector matvec_adjoint(const ComplexMatrix& a, const ComplexVector& x) {
  check_inner(a.rows(), x.size(), "matvec_adjoint");
  ComplexVector y(a.cols());
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = a.col(i).dot(x);
  return y;
}

}  // namespace par

namespace {
bool go_parallel(std::size_t w) { return openmp_enabled() && w >= kParallelWorkThreshold; }
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  return go_parallel(work(a.rows(), b.cols(), a.cols())) ? par::matmul(a, b)
                                                         : serial::matmul(a, b);
}

ComplexMatrix matmul_adjoint_left(const ComplexMatrix& a, const ComplexMatrix& b) {
  return go_parallel(work(a.cols(), b.cols(), a.rows()))
             ? par::matmul_adjoint_left(a, b)
             : serial::matmul_adjoint_left(a, b);
}

ComplexMatrix matmul_adjoint_right(const ComplexMatrix& a, const ComplexMatrix& b) {
  return go_parallel(work(a.rows(), b.rows(), a.cols()))
             ? par::matmul_adjoint_right(a, b)
             : serial::matmul_adjoint_right(a, b);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return go_parallel(work(a.rows() * b.rows(), a.cols() * b.cols(), 1))
             ? par::kron(a, b)
             : serial::kron(a, b);
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
  return go_parallel(work(a.rows(), 1, a.cols())) ? par::matvec(a, x)
                                                  : serial::matvec(a, x);
}

ComplexVector matvec_adjoint(const ComplexMatrix& a, const ComplexVector& x) {
  return go_parallel(work(a.cols(), 1, a.rows())) ? par::matvec_adjoint(a, x)
                                                  : serial::matvec_adjoint(a, x);
}

}  // namespace qstrack::kernels

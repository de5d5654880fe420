// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "qstrack/linalg.hpp"

// Dense complex kernels for the hot paths. Every kernel exists twice: a
// serial reference implementation and an OpenMP variant that partitions
// output columns/elements only, so each output entry is accumulated in the
// same order in both. Results are bit-identical for any thread count; the
// unit tests assert this and the benchmark tool compares throughput.
//
// The unqualified entry points dispatch on problem size (tiny problems are
// not worth a parallel region).

namespace qstrack::kernels {

namespace serial {
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
// a^dag * b
ComplexMatrix matmul_adjoint_left(const ComplexMatrix& a, const ComplexMatrix& b);
// a * b^dag
ComplexMatrix matmul_adjoint_right(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);
// a^dag * x
ComplexVector matvec_adjoint(const ComplexMatrix& a, const ComplexVector& x);
}  // namespace serial

namespace par {
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_adjoint_left(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_adjoint_right(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);
ComplexVector matvec_adjoint(const ComplexMatrix& a, const ComplexVector& x);
}  // namespace par

// Multiply-accumulate count below which dispatch stays serial.
inline constexpr std::size_t kParallelWorkThreshold = std::size_t{1} << 15;

bool openmp_enabled();

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_adjoint_left(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_adjoint_right(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);
ComplexVector matvec_adjoint(const ComplexMatrix& a, const ComplexVector& x);

}  // namespace qstrack::kernels

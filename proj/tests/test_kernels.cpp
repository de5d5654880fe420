// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstring>

#include "qstrack/kernels.hpp"
#include "support/test_rand.hpp"

using namespace qstrack;
using testing::random_matrix;
using testing::random_vector;

namespace {

bool bits_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(),
                     sizeof(Complex) * std::size_t(a.size())) == 0;
}

bool bits_equal(const ComplexVector& a, const ComplexVector& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(),
                     sizeof(Complex) * std::size_t(a.size())) == 0;
}

}  // namespace

TEST_CASE("serial kernels agree with Eigen") {
  CounterRng rng(21, CounterRng::kTest);
  const ComplexMatrix a = random_matrix(7, 5, rng);
  const ComplexMatrix b = random_matrix(5, 9, rng);
  CHECK((kernels::serial::matmul(a, b) - ComplexMatrix(a * b)).norm() <=
        1e-13 * (a * b).norm());

  const ComplexMatrix c = random_matrix(7, 9, rng);
  CHECK((kernels::serial::matmul_adjoint_left(a, c) -
         ComplexMatrix(a.adjoint() * c))
            .norm() <= 1e-13 * (a.adjoint() * c).norm());

  const ComplexMatrix e = random_matrix(9, 5, rng);
  CHECK((kernels::serial::matmul_adjoint_right(a, e) -
         ComplexMatrix(a * e.adjoint()))
            .norm() <= 1e-13 * (a * e.adjoint()).norm());

  const ComplexVector x = random_vector(5, rng);
  CHECK((kernels::serial::matvec(a, x) - ComplexVector(a * x)).norm() <=
        1e-13 * (a * x).norm());

  const ComplexVector y = random_vector(7, rng);
  CHECK((kernels::serial::matvec_adjoint(a, y) - ComplexVector(a.adjoint() * y))
            .norm() <= 1e-13 * (a.adjoint() * y).norm());
}

TEST_CASE("serial kron agrees with block construction") {
  CounterRng rng(22, CounterRng::kTest);
  const ComplexMatrix a = random_matrix(3, 4, rng);
  const ComplexMatrix b = random_matrix(2, 5, rng);
  ComplexMatrix expected(6, 20);
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      expected.block(i * 2, j * 5, 2, 5) = a(i, j) * b;
    }
  }
  CHECK(bits_equal(kernels::serial::kron(a, b), expected));
}

TEST_CASE("parallel kernels are bit-identical to serial") {
  CounterRng rng(23, CounterRng::kTest);
  const struct {
    Eigen::Index m, k, n;
  } shapes[] = {{1, 1, 1}, {7, 3, 5}, {40, 256, 17}, {129, 65, 33}, {256, 40, 256}};
  for (const auto& s : shapes) {
    const ComplexMatrix a = random_matrix(s.m, s.k, rng);
    const ComplexMatrix b = random_matrix(s.k, s.n, rng);
    CHECK(bits_equal(kernels::serial::matmul(a, b), kernels::par::matmul(a, b)));

    const ComplexMatrix c = random_matrix(s.m, s.n, rng);
    CHECK(bits_equal(kernels::serial::matmul_adjoint_left(a, c),
                     kernels::par::matmul_adjoint_left(a, c)));

    const ComplexMatrix e = random_matrix(s.n, s.k, rng);
    CHECK(bits_equal(kernels::serial::matmul_adjoint_right(a, e),
                     kernels::par::matmul_adjoint_right(a, e)));

    const ComplexVector x = random_vector(s.k, rng);
    CHECK(bits_equal(kernels::serial::matvec(a, x), kernels::par::matvec(a, x)));

    const ComplexVector y = random_vector(s.m, rng);
    CHECK(bits_equal(kernels::serial::matvec_adjoint(a, y),
                     kernels::par::matvec_adjoint(a, y)));

    CHECK(bits_equal(kernels::serial::kron(a, b), kernels::par::kron(a, b)));
  }
}

TEST_CASE("dispatched kernels match the serial reference bitwise") {
  CounterRng rng(24, CounterRng::kTest);
  // Small (below threshold) and large (above threshold, parallel path).
  for (Eigen::Index d : {8, 96}) {
    const ComplexMatrix a = random_matrix(d, d, rng);
    const ComplexMatrix b = random_matrix(d, d, rng);
    CHECK(bits_equal(kernels::matmul(a, b), kernels::serial::matmul(a, b)));
    const ComplexVector x = random_vector(d, rng);
    CHECK(bits_equal(kernels::matvec(a, x), kernels::serial::matvec(a, x)));
  }
}

TEST_CASE("kernel dimension checks") {
  const ComplexMatrix a = ComplexMatrix::Zero(2, 3);
  const ComplexMatrix b = ComplexMatrix::Zero(2, 3);
  CHECK_THROWS_AS(kernels::matmul(a, b), DimensionError);
  CHECK_THROWS_AS(kernels::matvec(a, ComplexVector::Zero(2)), DimensionError);
  CHECK_THROWS_AS(kernels::matvec_adjoint(a, ComplexVector::Zero(3)),
                  DimensionError);
}

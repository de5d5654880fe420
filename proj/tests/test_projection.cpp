// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <limits>

#include "qstrack/projection.hpp"
#include "support/oracles.hpp"
#include "support/test_rand.hpp"

using namespace qstrack;
using testing::bloch_grid_oracle;
using testing::random_density;
using testing::random_hermitian;
using testing::random_real_vector;
using testing::simplex_qp_oracle;

TEST_CASE("simplex projection on hand inputs") {
  RealVector on(2);
  on << 0.5, 0.5;
  CHECK((simplex_project(on) - on).norm() == 0.0);

  RealVector off(2);
  off << 1.2, -0.2;
  RealVector expected(2);
  expected << 1.0, 0.0;
  CHECK((simplex_project(off) - expected).norm() <= 1e-15);

  RealVector corner(2);
  corner << 2.0, 0.0;
  CHECK((simplex_project(corner) - expected).norm() <= 1e-15);

  CHECK_THROWS_AS(simplex_project(RealVector()), DimensionError);
  RealVector bad(2);
  bad << 1.0, std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(simplex_project(bad), NumericError);
}

TEST_CASE("simplex projection output is feasible") {
  CounterRng rng(31, CounterRng::kTest);
  for (int rep = 0; rep < 200; ++rep) {
    const Eigen::Index m = 1 + Eigen::Index(rng.next_u64() % 8);
    const RealVector x = simplex_project(2.0 * random_real_vector(m, rng));
    CHECK(x.minCoeff() >= 0.0);
    CHECK(std::abs(x.sum() - 1.0) <= 1e-12);
  }
}

TEST_CASE("simplex projection matches the active-set oracle") {
  CounterRng rng(32, CounterRng::kTest);
  for (int rep = 0; rep < 200; ++rep) {
    const Eigen::Index m = 1 + Eigen::Index(rng.next_u64() % 5);
    const RealVector v = 2.0 * random_real_vector(m, rng);
    CHECK((simplex_project(v) - simplex_qp_oracle(v)).norm() <= 1e-8);
  }
}

TEST_CASE("project_to_density on hand inputs") {
  ComplexMatrix valid(2, 2);
  valid << 0.5, 0, 0, 0.5;
  CHECK((project_to_density(valid).matrix() - valid).norm() <= 1e-12);

  ComplexMatrix indefinite(2, 2);
  indefinite << 1.2, 0, 0, -0.2;
  ComplexMatrix expected(2, 2);
  expected << 1, 0, 0, 0;
  CHECK((project_to_density(indefinite).matrix() - expected).norm() <= 1e-12);

  CHECK_THROWS_AS(project_to_density(ComplexMatrix::Zero(2, 3)), DimensionError);
  ComplexMatrix nan2 = ComplexMatrix::Zero(2, 2);
  nan2(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(project_to_density(nan2), NumericError);
}

TEST_CASE("projection output always satisfies the density invariants") {
  CounterRng rng(33, CounterRng::kTest);
  for (int rep = 0; rep < 50; ++rep) {
    const Eigen::Index d = rep % 2 ? 4 : 8;
    const ComplexMatrix h = 3.0 * testing::random_matrix(d, d, rng);
    CHECK_NOTHROW(DensityMatrix::validated(project_to_density(h).matrix()));
  }
}

TEST_CASE("projection is idempotent on valid states") {
  CounterRng rng(34, CounterRng::kTest);
  for (Eigen::Index d : {2, 4, 8}) {
    for (int rep = 0; rep < 10; ++rep) {
      const ComplexMatrix rho = random_density(d, rng);
      CHECK((project_to_density(rho).matrix() - rho).norm() <= 1e-10);
    }
  }
}

TEST_CASE("projection is closer than any feasible point") {
  CounterRng rng(35, CounterRng::kTest);
  for (int rep = 0; rep < 20; ++rep) {
    const Eigen::Index d = rep % 2 ? 2 : 4;
    const ComplexMatrix h = 2.0 * testing::random_matrix(d, d, rng);
    const ComplexMatrix target = hermitian_part(h);
    const double reached = (project_to_density(h).matrix() - target).norm();
    for (int s = 0; s < 100; ++s) {
      const ComplexMatrix sigma = random_density(d, rng);
      CHECK(reached <= (sigma - target).norm() + 1e-12);
    }
  }
}

TEST_CASE("projection matches the Bloch-ball grid oracle") {
  CounterRng rng(36, CounterRng::kTest);
  for (int rep = 0; rep < 25; ++rep) {
    const ComplexMatrix h = random_hermitian(2, rng);
    const ComplexMatrix ours = project_to_density(h).matrix();
    CHECK((ours - bloch_grid_oracle(h)).norm() <= 2e-3);
  }
}

// SPDX-License-Identifier: Apache-2.0
//
// Compares the serial reference kernels against the OpenMP variants and
// checks that both produce bit-identical output.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#ifdef QSTRACK_HAS_OPENMP
#include <omp.h>
#endif

#include "qstrack/kernels.hpp"
#include "qstrack/rng.hpp"

namespace {

using qstrack::Complex;
using qstrack::ComplexMatrix;
using qstrack::ComplexVector;
using qstrack::CounterRng;

ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, CounterRng& rng) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      m(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
    }
  }
  return m;
}

bool bit_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), sizeof(Complex) * std::size_t(a.size())) == 0;
}

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report(const std::string& name, double serial_ms, double par_ms, bool exact) {
  std::printf("%-28s %10.3f %10.3f %8.2fx   %s\n", name.c_str(), serial_ms,
              par_ms, serial_ms / par_ms, exact ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef QSTRACK_HAS_OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel variants fall back to serial\n");
#endif
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  CounterRng rng(7, CounterRng::kTest);
  namespace k = qstrack::kernels;

  for (Eigen::Index d : {64, 128, 256, 512}) {
    const ComplexMatrix a = random_matrix(d, d, rng);
    const ComplexMatrix b = random_matrix(d, d, rng);
    const int reps = d >= 512 ? 3 : 10;
    ComplexMatrix out_s, out_p;
    const double ts = time_ms([&] { out_s = k::serial::matmul(a, b); }, reps);
    const double tp = time_ms([&] { out_p = k::par::matmul(a, b); }, reps);
    report("matmul " + std::to_string(d) + "x" + std::to_string(d), ts, tp,
           bit_equal(out_s, out_p));
  }

  for (Eigen::Index d : {128, 256, 512}) {
    const ComplexMatrix a = random_matrix(d, d, rng);
    const ComplexMatrix b = random_matrix(d, d, rng);
    ComplexMatrix out_s, out_p;
    const double ts = time_ms([&] { out_s = k::serial::matmul_adjoint_left(a, b); }, 5);
    const double tp = time_ms([&] { out_p = k::par::matmul_adjoint_left(a, b); }, 5);
    report("matmul_adjoint_left " + std::to_string(d), ts, tp,
           bit_equal(out_s, out_p));
  }

  {
    const ComplexMatrix a = random_matrix(64, 64, rng);
    const ComplexMatrix b = random_matrix(16, 16, rng);
    ComplexMatrix out_s, out_p;
    const double ts = time_ms([&] { out_s = k::serial::kron(a, b); }, 10);
    const double tp = time_ms([&] { out_p = k::par::kron(a, b); }, 10);
    report("kron 64x64 (x) 16x16", ts, tp, bit_equal(out_s, out_p));
  }

  for (auto [rows, cols] : std::vector<std::pair<Eigen::Index, Eigen::Index>>{
           {40, 256}, {1024, 1024}, {4096, 256}}) {
    const ComplexMatrix a = random_matrix(rows, cols, rng);
    const ComplexVector x = random_matrix(cols, 1, rng);
    ComplexVector out_s, out_p;
    const double ts = time_ms([&] { out_s = k::serial::matvec(a, x); }, 50);
    const double tp = time_ms([&] { out_p = k::par::matvec(a, x); }, 50);
    report("matvec " + std::to_string(rows) + "x" + std::to_string(cols), ts, tp,
           bit_equal(ComplexMatrix(out_s), ComplexMatrix(out_p)));
  }

  return 0;
}

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qstrack/linalg.hpp"
#include "qstrack/rng.hpp"

namespace qstrack {

// Parameters of the simulated open-system dynamics. The drift Hamiltonian is
// a random 2-local Hermitian drawn from hamiltonian_seed and rescaled to a
// fixed spectral norm (kHamiltonianSpectralNorm in simulation.cpp).
struct DynamicsConfig {
  int n = 4;
  double coupling_strength = 0.5;  // weak-measurement strength, in [0, 1]
  std::uint64_t hamiltonian_seed = 1;
  double dt = 0.1;
  std::string observable = "ZIII";  // per-qubit labels, length n
};

// Evolution operators {A_i}; the same set serves as the weak-measurement
// operators in the Heisenberg recursion.
struct KrausSet {
  Eigen::Index dim = 0;
  std::vector<ComplexMatrix> operators;

  static constexpr double kCompletenessTol = 1e-10;

  // ||sum_i A_i^dag A_i - I||_F
  double completeness_defect() const;
  static KrausSet validated(Eigen::Index dim, std::vector<ComplexMatrix> ops);
};

// Random 2-local Hermitian (all weight-1 and weight-2 Pauli strings with
// Gaussian coefficients), rescaled to unit spectral norm.
ComplexMatrix random_two_local_hamiltonian(int n, std::uint64_t seed);

// exp(-i h t) for Hermitian h, via eigendecomposition.
ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double t);

// Principal square root of a Hermitian PSD matrix (tiny negative
// eigenvalues are clamped to zero).
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m);

// Two-operator weak-measurement channel
//   { U sqrt((I + c O)/2), U sqrt((I - c O)/2) },  U = exp(-i H dt),
// where O is the configured Pauli observable and c the coupling strength.
// Completeness holds by construction.
KrausSet make_kraus(const DynamicsConfig& cfg);
KrausSet make_kraus(const DynamicsConfig& cfg, const ComplexMatrix& hamiltonian);

// rho' = sum_i A_i rho A_i^dag
DensityMatrix evolve(const DensityMatrix& rho, const KrausSet& ks);

// M_k = sum_i A_i^dag M_{k-1} A_i (the adjoint channel; Heisenberg picture).
ComplexMatrix heisenberg_update(const ComplexMatrix& m_prev, const KrausSet& ks);

// tr(M^dag rho) + Gaussian(0, noise_std^2). M must be Hermitian.
double measure(const DensityMatrix& rho, const ComplexMatrix& m1,
               double noise_std, CounterRng& rng);

struct MeasurementRecord {
  std::vector<double> values;  // y_1 .. y_k
  double noise_std = 0.0;
};

// One sliding-window snapshot: row j of the sampling matrix is
// vec(M_{j+1})^dag and pairs with record entry j (entries ordered oldest
// first, so the newest measurement pairs with the most-evolved operator).
// Under the channel/adjoint duality this is the pairing for which the
// noiseless record satisfies A_k vec(rho_window_start) = b_k exactly.
struct MeasurementWindow {
  std::shared_ptr<const ComplexMatrix> sampling_matrix;  // l_eff x d^2
  RealVector record;                                     // b_k, length l_eff
  int window_length = 0;                                 // l
  long time = 0;                                         // k

  Eigen::Index rows() const { return record.size(); }
};

// Assemble the window at time k from the measurement history and the
// Heisenberg-evolved operator list M_1..M_l. l_eff = min(k, l).
MeasurementWindow build_window(const MeasurementRecord& history,
                               const std::vector<ComplexMatrix>& operators,
                               long k, int l);

// Replace the record by A_k vec(rho_true) + e with e fresh Gaussian noise,
// making the window constraint exactly realizable at the current true state.
MeasurementWindow synth_oracle_record(const DensityMatrix& rho_true,
                                      MeasurementWindow window,
                                      double noise_std, CounterRng& rng);

enum class DataMode { kOracle, kPhysical };

// Owns one simulated trajectory: true states, Heisenberg operator list,
// measurement record and per-step windows. Strictly sequential; independent
// runs may execute concurrently on separate instances.
class SimulationRun {
 public:
  struct StepData {
    long k = 0;
    MeasurementWindow window;
    ComplexVector p_star;  // vec of the current true state
    RealVector e_star;     // comparator noise: b - Re(A p*)
    double y = 0.0;        // measurement value recorded at this step
  };

  SimulationRun(const DynamicsConfig& dyn, DataMode mode, int window_length,
                double noise_std, std::uint64_t seed);
  // Test hook: explicit channel and/or initial state.
  SimulationRun(const DynamicsConfig& dyn, DataMode mode, int window_length,
                double noise_std, std::uint64_t seed, KrausSet kraus,
                std::optional<DensityMatrix> initial_state);

  StepData advance();

  long time() const { return k_; }
  const DensityMatrix& true_state() const { return rho_; }
  const KrausSet& kraus() const { return kraus_; }
  const MeasurementRecord& record() const { return record_; }
  const std::vector<ComplexMatrix>& window_operators() const { return ops_; }
  // Full-length sampling matrix (the l-row reference used for sigma_m).
  std::shared_ptr<const ComplexMatrix> reference_sampling_matrix() const;

 private:
  std::shared_ptr<const ComplexMatrix> prefix_matrix(Eigen::Index rows);

  DynamicsConfig dyn_;
  DataMode mode_;
  int l_;
  double noise_std_;
  KrausSet kraus_;
  std::vector<ComplexMatrix> ops_;  // M_1..M_l
  std::vector<std::shared_ptr<const ComplexMatrix>> prefix_cache_;
  DensityMatrix rho_;
  MeasurementRecord record_;
  CounterRng noise_rng_;
  CounterRng oracle_rng_;
  long k_ = 0;
};

// Normalized random pure state drawn from the given stream.
DensityMatrix random_pure_state(int n, CounterRng& rng);

}  // namespace qstrack

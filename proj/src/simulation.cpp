// SPDX-License-Identifier: Apache-2.0
#include "qstrack/simulation.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qstrack/kernels.hpp"

namespace qstrack {

namespace {

// Spectral norm of the random drift Hamiltonian. Sets the per-step rotation
// angle (norm * dt) and with it how quickly the simulated state relaxes
// toward the channel fixed point.
constexpr double kHamiltonianSpectralNorm = 1.25;

double spectral_norm_hermitian(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericError("spectral norm: eigendecomposition failed");
  }
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

double KrausSet::completeness_defect() const {
  ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
  for (const auto& a : operators) {
    acc += kernels::matmul_adjoint_left(a, a);
  }
  return (acc - ComplexMatrix::Identity(dim, dim)).norm();
}

KrausSet KrausSet::validated(Eigen::Index dim, std::vector<ComplexMatrix> ops) {
  if (ops.empty()) throw DimensionError("KrausSet: empty operator list");
  for (const auto& a : ops) {
    if (a.rows() != dim || a.cols() != dim) {
      throw DimensionError("KrausSet: operator dimension mismatch");
    }
  }
  KrausSet ks{dim, std::move(ops)};
  if (ks.completeness_defect() > kCompletenessTol) {
    throw NumericError("KrausSet: completeness defect above tolerance");
  }
  return ks;
}

ComplexMatrix random_two_local_hamiltonian(int n, std::uint64_t seed) {
  if (n < 1) throw ConfigError("hamiltonian: qubit count must be >= 1");
  const Eigen::Index d = Eigen::Index(1) << n;
  CounterRng rng(seed, CounterRng::kHamiltonian);
  const char paulis[3] = {'X', 'Y', 'Z'};

  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  for (int q = 0; q < n; ++q) {
    for (char p : paulis) {
      std::string labels(n, 'I');
      labels[q] = p;
      h += rng.next_gaussian() * pauli_observable(labels);
    }
  }
  for (int q1 = 0; q1 < n; ++q1) {
    for (int q2 = q1 + 1; q2 < n; ++q2) {
      for (char p1 : paulis) {
        for (char p2 : paulis) {
          std::string labels(n, 'I');
          labels[q1] = p1;
          labels[q2] = p2;
          h += rng.next_gaussian() * pauli_observable(labels);
        }
      }
    }
  }
  const double norm = spectral_norm_hermitian(h);
  if (norm > 0.0) h /= norm;
  return h;
}

ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw NumericError("unitary_from_hamiltonian: eigendecomposition failed");
  }
  const Complex mi(0.0, -1.0);
  ComplexVector phases = (mi * t * es.eigenvalues().cast<Complex>().array()).exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  if (es.info() != Eigen::Success) {
    throw NumericError("hermitian_sqrt: eigendecomposition failed");
  }
  RealVector w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

KrausSet make_kraus(const DynamicsConfig& cfg) {
  const ComplexMatrix h = kHamiltonianSpectralNorm *
                          random_two_local_hamiltonian(cfg.n, cfg.hamiltonian_seed);
  return make_kraus(cfg, h);
}

KrausSet make_kraus(const DynamicsConfig& cfg, const ComplexMatrix& hamiltonian) {
  const Eigen::Index d = Eigen::Index(1) << cfg.n;
  const ComplexMatrix obs = pauli_observable(cfg.n, cfg.observable);
  if (cfg.coupling_strength < 0.0) {
    throw ConfigError("make_kraus: coupling strength must be >= 0");
  }
  if (cfg.coupling_strength * spectral_norm_hermitian(obs) > 1.0 + 1e-12) {
    throw ConfigError(
        "make_kraus: coupling * ||observable|| exceeds 1; the measurement "
        "square roots would be complex");
  }
  if (hamiltonian.rows() != d || hamiltonian.cols() != d) {
    throw DimensionError("make_kraus: Hamiltonian dimension mismatch");
  }
  if (!(cfg.dt > 0.0)) throw ConfigError("make_kraus: dt must be > 0");

  const ComplexMatrix u = unitary_from_hamiltonian(hamiltonian, cfg.dt);
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
  const ComplexMatrix plus =
      hermitian_sqrt(0.5 * (eye + cfg.coupling_strength * obs));
  const ComplexMatrix minus =
      hermitian_sqrt(0.5 * (eye - cfg.coupling_strength * obs));
  std::vector<ComplexMatrix> ops;
  ops.push_back(kernels::matmul(u, plus));
  ops.push_back(kernels::matmul(u, minus));
  return KrausSet{d, std::move(ops)};
}

DensityMatrix evolve(const DensityMatrix& rho, const KrausSet& ks) {
  if (rho.dim() != ks.dim) {
    throw DimensionError("evolve: state and channel dimensions differ");
  }
  ComplexMatrix out = ComplexMatrix::Zero(ks.dim, ks.dim);
  for (const auto& a : ks.operators) {
    out += kernels::matmul_adjoint_right(kernels::matmul(a, rho.matrix()), a);
  }
  return DensityMatrix::trusted(std::move(out));
}

ComplexMatrix heisenberg_update(const ComplexMatrix& m_prev, const KrausSet& ks) {
  if (m_prev.rows() != ks.dim || m_prev.cols() != ks.dim) {
    throw DimensionError("heisenberg_update: operator dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(ks.dim, ks.dim);
  for (const auto& a : ks.operators) {
    out += kernels::matmul(kernels::matmul_adjoint_left(a, m_prev), a);
  }
  return out;
}

double measure(const DensityMatrix& rho, const ComplexMatrix& m1,
               double noise_std, CounterRng& rng) {
  if (m1.rows() != rho.dim() || m1.cols() != rho.dim()) {
    throw DimensionError("measure: operator dimension mismatch");
  }
  if (noise_std < 0.0) throw ConfigError("measure: noise_std must be >= 0");
  const Complex expectation =
      kernels::matmul_adjoint_left(m1, rho.matrix()).trace();
  if (std::abs(expectation.imag()) > 1e-9) {
    throw ConfigError("measure: operator is not Hermitian (complex expectation)");
  }
  return expectation.real() + noise_std * rng.next_gaussian();
}

namespace {

MeasurementWindow window_from_matrix(const MeasurementRecord& history,
                                     std::shared_ptr<const ComplexMatrix> a,
                                     long k, int l) {
  const Eigen::Index l_eff = a->rows();
  RealVector b(l_eff);
  for (Eigen::Index j = 0; j < l_eff; ++j) {
    b(j) = history.values[std::size_t(k) - std::size_t(l_eff) + std::size_t(j)];
  }
  return MeasurementWindow{std::move(a), std::move(b), l, k};
}

}  // namespace

MeasurementWindow build_window(const MeasurementRecord& history,
                               const std::vector<ComplexMatrix>& operators,
                               long k, int l) {
  if (k < 1) throw RangeError("build_window: time index must be >= 1");
  if (l < 1) throw ConfigError("build_window: window length must be >= 1");
  const Eigen::Index l_eff = std::min<Eigen::Index>(k, l);
  if (history.values.size() < std::size_t(k)) {
    throw DimensionError("build_window: history shorter than time index");
  }
  if (operators.size() < std::size_t(l_eff)) {
    throw DimensionError("build_window: fewer operators than window rows");
  }
  const Eigen::Index d2 = operators[0].size();
  auto a = std::make_shared<ComplexMatrix>(l_eff, d2);
  for (Eigen::Index j = 0; j < l_eff; ++j) {
    a->row(j) = vec(operators[std::size_t(j)]).adjoint();
  }
  return window_from_matrix(history, std::move(a), k, l);
}

MeasurementWindow synth_oracle_record(const DensityMatrix& rho_true,
                                      MeasurementWindow window,
                                      double noise_std, CounterRng& rng) {
  const ComplexVector p = vec(rho_true.matrix());
  if (window.sampling_matrix->cols() != p.size()) {
    throw DimensionError("synth_oracle_record: state/window dimension mismatch");
  }
  RealVector b = kernels::matvec(*window.sampling_matrix, p).real();
  for (Eigen::Index j = 0; j < b.size(); ++j) {
    b(j) += noise_std * rng.next_gaussian();
  }
  window.record = std::move(b);
  return window;
}

DensityMatrix random_pure_state(int n, CounterRng& rng) {
  const Eigen::Index d = Eigen::Index(1) << n;
  ComplexVector psi(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double re = rng.next_gaussian();
    const double im = rng.next_gaussian();
    psi(i) = Complex(re, im);
  }
  psi /= psi.norm();
  return DensityMatrix::trusted(psi * psi.adjoint());
}

SimulationRun::SimulationRun(const DynamicsConfig& dyn, DataMode mode,
                             int window_length, double noise_std,
                             std::uint64_t seed)
    : SimulationRun(dyn, mode, window_length, noise_std, seed, make_kraus(dyn),
                    std::nullopt) {}

SimulationRun::SimulationRun(const DynamicsConfig& dyn, DataMode mode,
                             int window_length, double noise_std,
                             std::uint64_t seed, KrausSet kraus,
                             std::optional<DensityMatrix> initial_state)
    : dyn_(dyn),
      mode_(mode),
      l_(window_length),
      noise_std_(noise_std),
      kraus_(std::move(kraus)),
      rho_(DensityMatrix::maximally_mixed(kraus_.dim)),
      noise_rng_(seed, CounterRng::kMeasurementNoise),
      oracle_rng_(seed, CounterRng::kOracleNoise) {
  if (l_ < 1) throw ConfigError("SimulationRun: window length must be >= 1");
  if (noise_std_ < 0.0) throw ConfigError("SimulationRun: noise_std must be >= 0");
  record_.noise_std = noise_std_;

  if (initial_state) {
    if (initial_state->dim() != kraus_.dim) {
      throw DimensionError("SimulationRun: initial state dimension mismatch");
    }
    rho_ = std::move(*initial_state);
  } else {
    CounterRng init_rng(seed, CounterRng::kInitialState);
    rho_ = random_pure_state(dyn_.n, init_rng);
  }

  ops_.reserve(std::size_t(l_));
  ops_.push_back(pauli_observable(dyn_.n, dyn_.observable));
  for (int j = 1; j < l_; ++j) {
    ops_.push_back(heisenberg_update(ops_.back(), kraus_));
  }
  prefix_cache_.assign(std::size_t(l_), nullptr);
}

std::shared_ptr<const ComplexMatrix> SimulationRun::prefix_matrix(
    Eigen::Index rows) {
  auto& slot = prefix_cache_[std::size_t(rows) - 1];
  if (!slot) {
    const Eigen::Index d2 = ops_[0].size();
    auto a = std::make_shared<ComplexMatrix>(rows, d2);
    for (Eigen::Index j = 0; j < rows; ++j) {
      a->row(j) = vec(ops_[std::size_t(j)]).adjoint();
    }
    slot = std::move(a);
  }
  return slot;
}

std::shared_ptr<const ComplexMatrix> SimulationRun::reference_sampling_matrix()
    const {
  return const_cast<SimulationRun*>(this)->prefix_matrix(l_);
}

SimulationRun::StepData SimulationRun::advance() {
  ++k_;
  if (k_ > 1) rho_ = evolve(rho_, kraus_);
  const double y = measure(rho_, ops_[0], noise_std_, noise_rng_);
  record_.values.push_back(y);

  const Eigen::Index l_eff = std::min<Eigen::Index>(k_, l_);
  MeasurementWindow window =
      window_from_matrix(record_, prefix_matrix(l_eff), k_, l_);
  if (mode_ == DataMode::kOracle) {
    window = synth_oracle_record(rho_, std::move(window), noise_std_, oracle_rng_);
  }

  StepData out;
  out.k = k_;
  out.p_star = vec(rho_.matrix());
  out.e_star =
      window.record - kernels::matvec(*window.sampling_matrix, out.p_star).real();
  out.window = std::move(window);
  out.y = y;
  return out;
}

}  // namespace qstrack

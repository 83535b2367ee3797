#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "routehobo/ising.hpp"

namespace routehobo {

inline constexpr std::size_t kDefaultMaxQubits = 22;

/// Dense n-qubit state. Amplitude index bit q is the value of qubit q.
class Statevector {
 public:
  Statevector() = default;
  Statevector(std::size_t num_qubits, Eigen::VectorXcd amplitudes);

  /// |b> for a single basis index.
  static Statevector basis(std::size_t num_qubits, std::uint64_t index);
  /// Hadamard on every qubit of |0...0>.
  static Statevector uniform(std::size_t num_qubits);

  std::size_t num_qubits() const { return num_qubits_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXcd& amplitudes() { return amplitudes_; }
  Eigen::VectorXd probabilities() const { return amplitudes_.cwiseAbs2(); }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

 private:
  std::size_t num_qubits_ = 0;
  Eigen::VectorXcd amplitudes_;
};

/// Multiplies each amplitude by exp(-i * gamma * energy(basis)).
Statevector apply_cost_layer(Statevector sv, const IsingHamiltonian& h, double gamma);
/// Same, with the energies already tabulated by diagonal_energies().
Statevector apply_cost_layer(Statevector sv, const Eigen::VectorXd& energies, double gamma);

/// exp(-i * beta * X) on every qubit.
Statevector apply_mixer_layer(Statevector sv, double beta);

/// <sv| H |sv> for diagonal H.
double expectation(const Statevector& sv, const IsingHamiltonian& h);
double expectation(const Statevector& sv, const Eigen::VectorXd& energies);

/// Fixed-seed generator for every random draw in the simulator: mt19937_64,
/// whose output sequence is fixed by the C++ standard. Uniform reals take the
/// top 53 bits of one output, so draws are identical across platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

using SampleCounts = std::map<std::uint64_t, std::size_t>;

/// Draws `shots` measurements from |amplitude|^2 by inverse-CDF lookup.
SampleCounts sample_distribution(const Statevector& sv, std::size_t shots, std::uint64_t seed);

/// Renders a basis index as qubit values, qubit 0 first.
std::string bitstring(std::uint64_t index, std::size_t num_qubits);

struct QaoaConfig {
  std::size_t reps = 2;
  std::size_t shots = 4096;
  std::uint64_t seed = 0;
  std::size_t optimizer_max_iters = 200;
  std::size_t optimizer_restarts = 3;
  /// gamma_1..gamma_p then beta_1..beta_p
  std::optional<std::vector<double>> initial_params;
  std::size_t max_qubits = kDefaultMaxQubits;
};

struct QaoaOutcome {
  std::vector<double> best_params;  // gamma_1..gamma_p, beta_1..beta_p
  double best_expectation = 0.0;
  /// Expectation at every objective evaluation, in order.
  std::vector<double> expectation_trace;
  /// Best expectation seen so far at every evaluation.
  std::vector<double> incumbent_trace;
  SampleCounts samples;
};

/// State after the QAOA circuit with the given angles, starting from the
/// uniform superposition.
Statevector qaoa_state(const Eigen::VectorXd& energies, std::size_t num_qubits,
                       const std::vector<double>& params);

/// Optimizes the angles with seeded Nelder-Mead restarts, then samples the
/// final state. Without initial_params the first restart begins at the best
/// point of a 6x6 (gamma, beta) grid over (0, pi) shared by all layers; the
/// rest begin at seeded uniform points in (0, pi).
QaoaOutcome run_qaoa(const IsingHamiltonian& h, const QaoaConfig& cfg);

std::string trace_csv(const QaoaOutcome& outcome);
std::string samples_csv(const SampleCounts& samples, std::size_t num_qubits);

}  // namespace routehobo

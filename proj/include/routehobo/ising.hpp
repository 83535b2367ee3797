#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "routehobo/binary_polynomial.hpp"

namespace routehobo {

/// Product of Pauli-Z operators on the qubits in `qubits` (a bit mask; the
/// empty mask is the identity), times a real coefficient.
struct PauliZTerm {
  Monomial qubits = 0;
  double coefficient = 0.0;
};

/// Diagonal Hamiltonian sum_S c_S Z_S. Bit 0 of a basis state is the +1
/// eigenvalue of Z and bit 1 is -1, matching x = (1 - Z) / 2.
class IsingHamiltonian {
 public:
  explicit IsingHamiltonian(std::size_t num_qubits = 0) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  const std::map<Monomial, double>& terms() const { return terms_; }
  std::vector<PauliZTerm> term_list() const;
  double coefficient(Monomial qubits) const;

  /// Merges into any existing term on the same qubits; drops residues below
  /// kCoefficientTolerance.
  void add_term(Monomial qubits, double coefficient);

  IsingHamiltonian& operator+=(const IsingHamiltonian& other);
  friend IsingHamiltonian operator+(IsingHamiltonian a, const IsingHamiltonian& b) { return a += b; }

 private:
  std::size_t num_qubits_ = 0;
  std::map<Monomial, double> terms_;
};

/// Substitutes x_i = (1 - Z_i) / 2 and expands.
IsingHamiltonian lower_to_ising(const BinaryPolynomial& p);

/// sum over terms of c_S * prod_{q in S} (+1 if bit q is 0 else -1).
double energy(const IsingHamiltonian& h, Assignment basis_state);
double energy(const IsingHamiltonian& h, std::span<const std::uint8_t> bits);

/// Energies of all 2^n basis states (fast Walsh-Hadamard transform of the
/// coefficient table).
Eigen::VectorXd diagonal_energies(const IsingHamiltonian& h);

/// Term count keyed by the number of Z factors.
std::map<std::size_t, std::size_t> term_count_by_degree(const IsingHamiltonian& h);

/// Terms sorted by (degree, qubits), 12 significant digits:
///   <coefficient> Z0 Z3
std::string to_text(const IsingHamiltonian& h);

/// Number of start-to-vertex-i paths when every vertex links to the next two:
/// C_0 = C_1 = 1, C_i = C_{i-1} + C_{i-2}. Exact up to i = 91.
std::uint64_t fibonacci_path_count(std::size_t i);

/// Binet's closed form for the same sequence.
double fibonacci_closed_form(std::size_t i);

}  // namespace routehobo

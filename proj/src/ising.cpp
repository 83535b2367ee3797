#include "routehobo/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>

#include "routehobo/error.hpp"

namespace routehobo {

std::vector<PauliZTerm> IsingHamiltonian::term_list() const {
  std::vector<PauliZTerm> out;
  out.reserve(terms_.size());
  for (const auto& [q, c] : terms_) out.push_back({q, c});
  return out;
}

double IsingHamiltonian::coefficient(Monomial qubits) const {
  auto it = terms_.find(qubits);
  return it == terms_.end() ? 0.0 : it->second;
}

void IsingHamiltonian::add_term(Monomial qubits, double coefficient) {
  if (num_qubits_ < kMaxVariables && (qubits >> num_qubits_) != 0) {
    throw Error("Pauli term acts outside the register");
  }
  auto [it, inserted] = terms_.try_emplace(qubits, coefficient);
  if (!inserted) it->second += coefficient;
  if (std::abs(it->second) < kCoefficientTolerance) terms_.erase(it);
}

IsingHamiltonian& IsingHamiltonian::operator+=(const IsingHamiltonian& other) {
  num_qubits_ = std::max(num_qubits_, other.num_qubits_);
  for (const auto& [q, c] : other.terms_) add_term(q, c);
  return *this;
}

IsingHamiltonian lower_to_ising(const BinaryPolynomial& p) {
  // c * prod_{i in S} (1 - Z_i)/2 = c / 2^|S| * sum_{T subset S} (-1)^|T| Z_T
  std::map<Monomial, double> acc;
  for (const auto& [m, c] : p.terms()) {
    const double scaled = std::ldexp(c, -static_cast<int>(monomial_degree(m)));
    Monomial sub = m;
    while (true) {
      acc[sub] += (std::popcount(sub) % 2 == 0) ? scaled : -scaled;
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  IsingHamiltonian h(p.num_vars());
  for (const auto& [q, c] : acc) h.add_term(q, c);
  return h;
}

double energy(const IsingHamiltonian& h, Assignment basis_state) {
  double sum = 0.0;
  for (const auto& [q, c] : h.terms()) {
    sum += (std::popcount(q & basis_state) % 2 == 0) ? c : -c;
  }
  return sum;
}

double energy(const IsingHamiltonian& h, std::span<const std::uint8_t> bits) {
  if (bits.size() != h.num_qubits()) {
    throw Error("basis state length " + std::to_string(bits.size()) + " does not match " +
                std::to_string(h.num_qubits()) + " qubits");
  }
  return energy(h, pack_assignment(bits));
}

Eigen::VectorXd diagonal_energies(const IsingHamiltonian& h) {
  const std::size_t n = h.num_qubits();
  if (n > 30) throw Error("too many qubits to tabulate the diagonal");
  const Eigen::Index size = Eigen::Index{1} << n;
  Eigen::VectorXd table = Eigen::VectorXd::Zero(size);
  for (const auto& [q, c] : h.terms()) table[static_cast<Eigen::Index>(q)] = c;
  for (std::size_t bit = 0; bit < n; ++bit) {
    const Eigen::Index step = Eigen::Index{1} << bit;
    for (Eigen::Index a = 0; a < size; ++a) {
      if (a & step) continue;
      const double u = table[a];
      const double v = table[a | step];
      table[a] = u + v;
      table[a | step] = u - v;
    }
  }
  return table;
}

std::map<std::size_t, std::size_t> term_count_by_degree(const IsingHamiltonian& h) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& [q, c] : h.terms()) ++counts[monomial_degree(q)];
  return counts;
}

std::string to_text(const IsingHamiltonian& h) {
  std::vector<std::pair<Monomial, double>> sorted(h.terms().begin(), h.terms().end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const auto da = monomial_degree(a.first);
    const auto db = monomial_degree(b.first);
    if (da != db) return da < db;
    return monomial_variables(a.first) < monomial_variables(b.first);
  });
  std::string out;
  char buf[64];
  for (const auto& [q, c] : sorted) {
    std::snprintf(buf, sizeof buf, "%.12g", c);
    out += buf;
    for (std::size_t v : monomial_variables(q)) out += " Z" + std::to_string(v);
    out += '\n';
  }
  return out;
}

std::uint64_t fibonacci_path_count(std::size_t i) {
  if (i > 91) throw Error("path count overflows 64 bits beyond index 91");
  std::uint64_t prev = 1;
  std::uint64_t cur = 1;
  for (std::size_t k = 1; k < i; ++k) {
    const std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

double fibonacci_closed_form(std::size_t i) {
  const long double root5 = std::sqrt(5.0L);
  const long double phi = (1.0L + root5) / 2.0L;
  const long double psi = (1.0L - root5) / 2.0L;
  const auto k = static_cast<long double>(i + 1);
  return static_cast<double>((std::pow(phi, k) - std::pow(psi, k)) / root5);
}

}  // namespace routehobo

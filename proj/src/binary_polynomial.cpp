#include "routehobo/binary_polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>

#include "routehobo/error.hpp"

namespace routehobo {

namespace {

// Sorting key for stable dumps: degree first, then the index list.
bool dump_order(Monomial a, Monomial b) {
  const auto da = monomial_degree(a);
  const auto db = monomial_degree(b);
  if (da != db) return da < db;
  return monomial_variables(a) < monomial_variables(b);
}

void check_width(std::size_t num_vars) {
  if (num_vars > kMaxVariables) {
    throw Error("binary polynomials support at most 64 variables, got " +
                std::to_string(num_vars));
  }
}

}  // namespace

std::vector<std::size_t> monomial_variables(Monomial m) {
  std::vector<std::size_t> vars;
  while (m != 0) {
    vars.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return vars;
}

std::size_t monomial_degree(Monomial m) { return static_cast<std::size_t>(std::popcount(m)); }

Assignment pack_assignment(std::span<const std::uint8_t> bits) {
  check_width(bits.size());
  Assignment a = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw Error("assignment entries must be 0 or 1");
    if (bits[i]) a |= Assignment{1} << i;
  }
  return a;
}

std::vector<std::uint8_t> unpack_assignment(Assignment a, std::size_t num_vars) {
  std::vector<std::uint8_t> bits(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) bits[i] = static_cast<std::uint8_t>((a >> i) & 1U);
  return bits;
}

bool lexicographically_less(Assignment a, Assignment b) {
  const Assignment diff = a ^ b;
  if (diff == 0) return false;
  const Assignment lowest = diff & (~diff + 1);
  return (a & lowest) == 0;
}

BinaryPolynomial::BinaryPolynomial(std::size_t num_vars) : num_vars_(num_vars) {
  check_width(num_vars);
}

BinaryPolynomial BinaryPolynomial::constant(std::size_t num_vars, double value) {
  BinaryPolynomial p(num_vars);
  p.add_term(0, value);
  return p;
}

BinaryPolynomial BinaryPolynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw Error("variable index out of range");
  BinaryPolynomial p(num_vars);
  p.add_term(Monomial{1} << index, 1.0);
  return p;
}

BinaryPolynomial BinaryPolynomial::complement(std::size_t num_vars, std::size_t index) {
  BinaryPolynomial p = constant(num_vars, 1.0);
  p -= variable(num_vars, index);
  return p;
}

std::size_t BinaryPolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

double BinaryPolynomial::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

void BinaryPolynomial::add_term(Monomial m, double coefficient) {
  if (num_vars_ < kMaxVariables && (m >> num_vars_) != 0) {
    throw Error("monomial uses a variable outside the polynomial");
  }
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) it->second += coefficient;
  if (std::abs(it->second) < kCoefficientTolerance) terms_.erase(it);
}

void BinaryPolynomial::widen(std::size_t num_vars) {
  check_width(num_vars);
  num_vars_ = std::max(num_vars_, num_vars);
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
  widen(other.num_vars_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BinaryPolynomial& BinaryPolynomial::operator-=(const BinaryPolynomial& other) {
  widen(other.num_vars_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BinaryPolynomial& BinaryPolynomial::operator*=(double scale) {
  if (scale == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scale;
    if (std::abs(it->second) < kCoefficientTolerance) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

BinaryPolynomial& BinaryPolynomial::operator*=(const BinaryPolynomial& other) {
  *this = *this * other;
  return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  BinaryPolynomial out(std::max(a.num_vars(), b.num_vars()));
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma | mb, ca * cb);
  }
  return out;
}

double evaluate(const BinaryPolynomial& p, Assignment assignment) {
  double sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    if ((assignment & m) == m) sum += c;
  }
  return sum;
}

double evaluate(const BinaryPolynomial& p, std::span<const std::uint8_t> bits) {
  if (bits.size() != p.num_vars()) {
    throw Error("assignment length " + std::to_string(bits.size()) + " does not match " +
                std::to_string(p.num_vars()) + " variables");
  }
  return evaluate(p, pack_assignment(bits));
}

Eigen::VectorXd all_values(const BinaryPolynomial& p) {
  const std::size_t n = p.num_vars();
  if (n > 30) throw Error("too many variables to tabulate all assignments");
  const Eigen::Index size = Eigen::Index{1} << n;
  Eigen::VectorXd table = Eigen::VectorXd::Zero(size);
  for (const auto& [m, c] : p.terms()) table[static_cast<Eigen::Index>(m)] = c;
  for (std::size_t bit = 0; bit < n; ++bit) {
    const Eigen::Index step = Eigen::Index{1} << bit;
    for (Eigen::Index a = 0; a < size; ++a) {
      if (a & step) table[a] += table[a ^ step];
    }
  }
  return table;
}

std::string to_text(const BinaryPolynomial& p) {
  std::vector<std::pair<Monomial, double>> sorted(p.terms().begin(), p.terms().end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return dump_order(a.first, b.first); });
  std::string out;
  char buf[64];
  for (const auto& [m, c] : sorted) {
    std::snprintf(buf, sizeof buf, "%.12g", c);
    out += buf;
    for (std::size_t v : monomial_variables(m)) out += " x" + std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace routehobo

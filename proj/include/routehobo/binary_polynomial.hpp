#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace routehobo {

/// A monomial is a set of binary variables stored as a bit mask: bit k set
/// means variable x_k appears. Multiplying monomials is a union, which keeps
/// every product multilinear (x * x = x).
using Monomial = std::uint64_t;

/// An assignment of all variables, bit k holding the value of x_k.
using Assignment = std::uint64_t;

inline constexpr std::size_t kMaxVariables = 64;

/// Coefficients with magnitude below this are treated as cancellation
/// residue and dropped.
inline constexpr double kCoefficientTolerance = 1e-12;

std::vector<std::size_t> monomial_variables(Monomial m);
std::size_t monomial_degree(Monomial m);

/// Packs a 0/1 vector (index = variable) into an Assignment.
Assignment pack_assignment(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> unpack_assignment(Assignment a, std::size_t num_vars);

/// True iff `a` precedes `b` when read as the bit sequence x_0, x_1, ...
bool lexicographically_less(Assignment a, Assignment b);

/// Multilinear polynomial over binary variables x_0..x_{num_vars-1}.
class BinaryPolynomial {
 public:
  explicit BinaryPolynomial(std::size_t num_vars = 0);

  static BinaryPolynomial constant(std::size_t num_vars, double value);
  static BinaryPolynomial variable(std::size_t num_vars, std::size_t index);
  /// 1 - x_index
  static BinaryPolynomial complement(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Monomial, double>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t degree() const;
  double coefficient(Monomial m) const;

  void add_term(Monomial m, double coefficient);

  BinaryPolynomial& operator+=(const BinaryPolynomial& other);
  BinaryPolynomial& operator-=(const BinaryPolynomial& other);
  BinaryPolynomial& operator*=(double scale);
  BinaryPolynomial& operator*=(const BinaryPolynomial& other);

  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }
  friend BinaryPolynomial operator-(BinaryPolynomial a, const BinaryPolynomial& b) { return a -= b; }
  friend BinaryPolynomial operator*(BinaryPolynomial a, double s) { return a *= s; }
  friend BinaryPolynomial operator*(double s, BinaryPolynomial a) { return a *= s; }
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);

 private:
  void widen(std::size_t num_vars);

  std::size_t num_vars_ = 0;
  std::map<Monomial, double> terms_;
};

/// Sum of the coefficients of monomials whose variables are all set.
double evaluate(const BinaryPolynomial& p, Assignment assignment);
/// Same, from an explicit 0/1 vector whose length must equal num_vars.
double evaluate(const BinaryPolynomial& p, std::span<const std::uint8_t> bits);

/// Values of `p` on all 2^num_vars assignments, indexed by Assignment, via
/// the subset-sum transform of the coefficient table.
Eigen::VectorXd all_values(const BinaryPolynomial& p);

/// One term per line, sorted by (degree, indices), 12 significant digits:
///   <coefficient> x0 x3
/// The constant term prints as just the coefficient.
std::string to_text(const BinaryPolynomial& p);

}  // namespace routehobo

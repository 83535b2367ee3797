#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "routehobo/binary_polynomial.hpp"
#include "routehobo/route_graph.hpp"

namespace routehobo {

/// Variable layout of a graph's edge codes: vertex i owns bits(i)
/// consecutive variables starting at offset(i), least significant code bit
/// first.
class CodeLayout {
 public:
  CodeLayout() = default;
  explicit CodeLayout(const CandidateGraph& g);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t offset(std::size_t vertex) const { return offsets_.at(vertex); }
  std::size_t bits(std::size_t vertex) const { return bits_.at(vertex); }
  std::size_t var_of(std::size_t vertex, std::size_t bit) const;
  /// Code written in vertex's bits by `assignment`.
  std::size_t read_code(std::size_t vertex, Assignment assignment) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> bits_;
  std::size_t num_vars_ = 0;
};

/// Multilinear polynomial equal to 1 exactly when the vertex's bits spell
/// `code` and 0 otherwise. A vertex without code bits yields the constant 1.
BinaryPolynomial code_indicator(const CandidateGraph& g, std::size_t vertex, std::size_t code);

/// 2 * (sum of edge weights) + 1, which exceeds the cost of every path.
double default_penalty_weight(const CandidateGraph& g);

struct HoboModel {
  CandidateGraph graph;
  CodeLayout layout;
  /// Sum over edges of weight * h(i, j); h(i, j) is 1 iff the path reaches i
  /// and vertex i selects the edge to j.
  BinaryPolynomial objective;
  /// One indicator per unused code per vertex.
  BinaryPolynomial penalty;
  double penalty_weight = 0.0;

  std::size_t num_vars() const { return layout.num_vars(); }
  std::size_t var_of(std::size_t vertex, std::size_t bit) const { return layout.var_of(vertex, bit); }
  /// objective + penalty_weight * penalty
  BinaryPolynomial full_objective() const;
};

/// Builds the HOBO model with the reachability recurrence
///   h(0, j) = indicator(0, code(0, j))
///   h(i, j) = (sum over k of h(k, i)) * indicator(i, code(i, j)),
/// evaluated in vertex order.
HoboModel build_hobo(const CandidateGraph& g, std::optional<double> penalty_weight = std::nullopt);

/// Edge-indicator QUBO: one variable per edge in CandidateGraph::edges()
/// order; cost plus lambda1 * flow balance on interior vertices plus
/// lambda2 * single-exit/single-entry at the endpoints.
BinaryPolynomial build_qubo(const CandidateGraph& g, double lambda1, double lambda2);

/// 2 * |E|, used for both QUBO multipliers when none are given.
double default_qubo_multiplier(const CandidateGraph& g);

struct InvalidCode {
  std::size_t vertex = 0;
  std::size_t code = 0;

  friend bool operator==(const InvalidCode&, const InvalidCode&) = default;
};

struct DecodedPath {
  /// Edges walked from vertex 0; complete only when `invalid` is empty.
  std::vector<Edge> edges;
  std::optional<InvalidCode> invalid;

  bool valid() const { return !invalid.has_value(); }
  double cost() const;
  /// Vertices visited, starting at 0.
  std::vector<std::size_t> vertices() const;
};

/// Follows codes from vertex 0 to the last vertex. Bits of vertices off the
/// walked path are ignored.
DecodedPath decode_assignment(const HoboModel& m, Assignment assignment);

}  // namespace routehobo

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "routehobo/geometry.hpp"

namespace routehobo {

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Number of code bits needed to address `count` choices: ceil(log2 count),
/// with 0 for counts of 0 or 1.
std::size_t code_bits(std::size_t count);

/// Forward-edge DAG over route vertices 0..n-1. Edges leaving a vertex are
/// kept sorted by target, and the position of an edge in that list is its
/// code.
class CandidateGraph {
 public:
  CandidateGraph() = default;

  /// Builds a graph from an explicit edge list. Requires from < to < n,
  /// positive weights, no duplicate edges, and at least one outgoing edge
  /// on every vertex but the last.
  static CandidateGraph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const { return forward_.size(); }
  const std::vector<Edge>& forward(std::size_t vertex) const { return forward_.at(vertex); }
  std::size_t out_degree(std::size_t vertex) const { return forward_.at(vertex).size(); }
  std::size_t bits(std::size_t vertex) const { return code_bits(out_degree(vertex)); }

  /// Code of edge (from, to) within forward(from). Throws if absent.
  std::size_t code(std::size_t from, std::size_t to) const;
  bool has_edge(std::size_t from, std::size_t to) const;

  /// All edges ordered by (from, to).
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  /// Induced graph on vertices [first, last], renumbered from 0. Edges that
  /// leave the range are dropped.
  CandidateGraph subgraph(std::size_t first, std::size_t last) const;

 private:
  std::vector<std::vector<Edge>> forward_;
};

/// True iff every point strictly between i and j lies within `epsilon` of
/// the line through points i and j.
bool is_valid_edge(const Polyline& route, std::size_t i, std::size_t j, double epsilon);

/// Thinned candidate graph: every forward edge (i, j) with j - i <=
/// max_offset that passes is_valid_edge. Adjacent edges are always present.
CandidateGraph build_candidate_graph(const Polyline& route, double epsilon,
                                     std::optional<std::size_t> max_offset = std::nullopt);

/// Sum over vertices of ceil(log2 e_i).
std::size_t hobo_variable_count(const CandidateGraph& g);

/// One variable per edge.
std::size_t qubo_variable_count(const CandidateGraph& g);

/// Interior vertices spanned by no edge. Every start-to-end path visits them.
std::vector<std::size_t> find_theoretical_division_points(const CandidateGraph& g);

enum class DivisionKind { Theoretical, Computational };

struct Boundary {
  std::size_t vertex = 0;
  DivisionKind kind = DivisionKind::Theoretical;

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

struct SegmentPlan {
  std::size_t num_vertices = 0;
  std::vector<Boundary> boundaries;  // sorted by vertex

  /// Contiguous [first, last] vertex ranges covering 0..n-1, sharing their
  /// boundary vertices.
  std::vector<std::pair<std::size_t, std::size_t>> segments() const;
};

inline constexpr std::size_t kUnboundedBudget = std::numeric_limits<std::size_t>::max();

/// Cuts at every theoretical division point, then splits any segment whose
/// HOBO variable count exceeds `qubit_budget` with greedy farthest-feasible
/// computational cuts.
SegmentPlan plan_segments(const CandidateGraph& g, std::size_t qubit_budget);

/// Plan that cuts only at theoretical division points.
SegmentPlan theoretical_plan(const CandidateGraph& g);

}  // namespace routehobo

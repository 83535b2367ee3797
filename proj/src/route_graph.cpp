#include "routehobo/route_graph.hpp"

#include <algorithm>
#include <string>

namespace routehobo {

std::size_t code_bits(std::size_t count) {
  std::size_t bits = 0;
  while (count > (std::size_t{1} << bits)) ++bits;
  return bits;
}

CandidateGraph CandidateGraph::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n < 2) throw Error("candidate graph needs at least 2 vertices");
  CandidateGraph g;
  g.forward_.resize(n);
  for (const Edge& e : edges) {
    if (!(e.from < e.to && e.to < n)) {
      throw Error("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                  ") is not a forward edge inside the graph");
    }
    if (!(e.weight > 0.0)) throw Error("edge weights must be positive");
    g.forward_[e.from].push_back(e);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& out = g.forward_[i];
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.to < b.to; });
    for (std::size_t k = 1; k < out.size(); ++k) {
      if (out[k].to == out[k - 1].to) throw Error("duplicate edge");
    }
    if (i + 1 < n && out.empty()) {
      throw Error("vertex " + std::to_string(i) + " has no outgoing edge");
    }
  }
  return g;
}

std::size_t CandidateGraph::code(std::size_t from, std::size_t to) const {
  const auto& out = forward_.at(from);
  auto it = std::lower_bound(out.begin(), out.end(), to,
                             [](const Edge& e, std::size_t t) { return e.to < t; });
  if (it == out.end() || it->to != to) {
    throw Error("no edge (" + std::to_string(from) + "," + std::to_string(to) + ")");
  }
  return static_cast<std::size_t>(it - out.begin());
}

bool CandidateGraph::has_edge(std::size_t from, std::size_t to) const {
  if (from >= forward_.size()) return false;
  const auto& out = forward_[from];
  return std::any_of(out.begin(), out.end(), [to](const Edge& e) { return e.to == to; });
}

std::vector<Edge> CandidateGraph::edges() const {
  std::vector<Edge> all;
  for (const auto& out : forward_) all.insert(all.end(), out.begin(), out.end());
  return all;
}

std::size_t CandidateGraph::edge_count() const {
  std::size_t count = 0;
  for (const auto& out : forward_) count += out.size();
  return count;
}

CandidateGraph CandidateGraph::subgraph(std::size_t first, std::size_t last) const {
  if (!(first < last && last < size())) throw Error("invalid subgraph range");
  std::vector<Edge> kept;
  for (std::size_t i = first; i < last; ++i) {
    for (const Edge& e : forward_[i]) {
      if (e.to <= last) kept.push_back({e.from - first, e.to - first, e.weight});
    }
  }
  return from_edges(last - first + 1, std::move(kept));
}

bool is_valid_edge(const Polyline& route, std::size_t i, std::size_t j, double epsilon) {
  if (!(i < j && j < route.size())) throw Error("edge indices out of range");
  const Segment chord{route[i], route[j]};
  for (std::size_t k = i + 1; k < j; ++k) {
    if (perpendicular_distance(route[k], chord) > epsilon) return false;
  }
  return true;
}

CandidateGraph build_candidate_graph(const Polyline& route, double epsilon,
                                     std::optional<std::size_t> max_offset) {
  const std::size_t n = route.size();
  if (n < 2) throw Error("route too short");
  if (epsilon < 0.0) throw Error("negative threshold");
  const std::size_t reach = max_offset.value_or(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1, 1.0});
    for (std::size_t j = i + 2; j < n && j - i <= reach; ++j) {
      if (is_valid_edge(route, i, j, epsilon)) edges.push_back({i, j, 1.0});
    }
  }
  return CandidateGraph::from_edges(n, std::move(edges));
}

std::size_t hobo_variable_count(const CandidateGraph& g) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) total += g.bits(i);
  return total;
}

std::size_t qubo_variable_count(const CandidateGraph& g) { return g.edge_count(); }

std::vector<std::size_t> find_theoretical_division_points(const CandidateGraph& g) {
  const std::size_t n = g.size();
  // farthest[v]: largest edge target among edges starting before v.
  std::vector<std::size_t> points;
  std::size_t farthest = 0;
  for (std::size_t v = 1; v + 1 < n; ++v) {
    for (const Edge& e : g.forward(v - 1)) farthest = std::max(farthest, e.to);
    if (farthest <= v) points.push_back(v);
  }
  return points;
}

std::vector<std::pair<std::size_t, std::size_t>> SegmentPlan::segments() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (num_vertices < 2) return out;
  std::size_t start = 0;
  for (const Boundary& b : boundaries) {
    out.emplace_back(start, b.vertex);
    start = b.vertex;
  }
  out.emplace_back(start, num_vertices - 1);
  return out;
}

SegmentPlan theoretical_plan(const CandidateGraph& g) {
  SegmentPlan plan;
  plan.num_vertices = g.size();
  for (std::size_t v : find_theoretical_division_points(g)) {
    plan.boundaries.push_back({v, DivisionKind::Theoretical});
  }
  return plan;
}

SegmentPlan plan_segments(const CandidateGraph& g, std::size_t qubit_budget) {
  if (qubit_budget < 1) throw Error("qubit budget must be at least 1");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.bits(i) > qubit_budget) throw Error("budget too small for vertex fan-out");
  }

  std::vector<std::vector<std::size_t>> sources(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (const Edge& e : g.forward(i)) sources[e.to].push_back(i);
  }

  const SegmentPlan coarse = theoretical_plan(g);
  SegmentPlan plan;
  plan.num_vertices = g.size();
  std::vector<std::size_t> inside(g.size(), 0);
  for (const auto& [first, last] : coarse.segments()) {
    std::size_t start = first;
    // Grow [start, end] one vertex at a time, tracking each source's count of
    // edges that stay inside the range. A single edge costs no bits, so the
    // first vertex past the budget always leaves a non-empty feasible range.
    std::size_t total = 0;
    std::fill(inside.begin() + start, inside.begin() + last + 1, 0);
    for (std::size_t end = start + 1; end <= last; ++end) {
      for (std::size_t s : sources[end]) {
        if (s < start) continue;
        total -= code_bits(inside[s]);
        total += code_bits(++inside[s]);
      }
      if (total > qubit_budget) {
        plan.boundaries.push_back({end - 1, DivisionKind::Computational});
        start = end - 1;
        std::fill(inside.begin() + start, inside.begin() + last + 1, 0);
        total = 0;
        end = start;  // rescan from the new start
      }
    }
    if (last + 1 < g.size()) plan.boundaries.push_back({last, DivisionKind::Theoretical});
  }
  return plan;
}

}  // namespace routehobo

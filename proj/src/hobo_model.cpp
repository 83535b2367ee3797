#include "routehobo/hobo_model.hpp"

#include <string>

namespace routehobo {

CodeLayout::CodeLayout(const CandidateGraph& g) {
  offsets_.reserve(g.size());
  bits_.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    offsets_.push_back(num_vars_);
    bits_.push_back(g.bits(i));
    num_vars_ += g.bits(i);
  }
}

std::size_t CodeLayout::var_of(std::size_t vertex, std::size_t bit) const {
  if (bit >= bits(vertex)) throw Error("code bit out of range");
  return offsets_[vertex] + bit;
}

std::size_t CodeLayout::read_code(std::size_t vertex, Assignment assignment) const {
  const std::size_t width = bits(vertex);
  if (width == 0) return 0;
  return static_cast<std::size_t>((assignment >> offsets_[vertex]) & ((Assignment{1} << width) - 1));
}

BinaryPolynomial code_indicator(const CandidateGraph& g, std::size_t vertex, std::size_t code) {
  const CodeLayout layout(g);
  const std::size_t width = layout.bits(vertex);
  if (code >= (std::size_t{1} << width)) {
    throw Error("code " + std::to_string(code) + " out of range for vertex " + std::to_string(vertex));
  }
  const std::size_t n = layout.num_vars();
  BinaryPolynomial out = BinaryPolynomial::constant(n, 1.0);
  for (std::size_t bit = 0; bit < width; ++bit) {
    const std::size_t var = layout.var_of(vertex, bit);
    out *= ((code >> bit) & 1U) ? BinaryPolynomial::variable(n, var)
                                : BinaryPolynomial::complement(n, var);
  }
  return out;
}

double default_penalty_weight(const CandidateGraph& g) {
  double total = 0.0;
  for (const Edge& e : g.edges()) total += e.weight;
  return 2.0 * total + 1.0;
}

BinaryPolynomial HoboModel::full_objective() const {
  BinaryPolynomial full = objective;
  full += penalty_weight * penalty;
  return full;
}

HoboModel build_hobo(const CandidateGraph& g, std::optional<double> penalty_weight) {
  HoboModel model{g, CodeLayout(g), BinaryPolynomial(), BinaryPolynomial(), 0.0};
  const std::size_t n = g.size();
  const std::size_t vars = model.layout.num_vars();
  model.objective = BinaryPolynomial(vars);
  model.penalty = BinaryPolynomial(vars);
  model.penalty_weight = penalty_weight.value_or(default_penalty_weight(g));

  // reach[i] = sum of h(k, i) over incoming edges; vertex 0 is always reached.
  std::vector<BinaryPolynomial> reach(n, BinaryPolynomial(vars));
  reach[0] = BinaryPolynomial::constant(vars, 1.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& out = g.forward(i);
    for (std::size_t code = 0; code < out.size(); ++code) {
      const BinaryPolynomial h = reach[i] * code_indicator(g, i, code);
      model.objective += out[code].weight * h;
      reach[out[code].to] += h;
    }
    reach[i] = BinaryPolynomial();
    for (std::size_t code = out.size(); code < (std::size_t{1} << g.bits(i)); ++code) {
      model.penalty += code_indicator(g, i, code);
    }
  }
  return model;
}

double default_qubo_multiplier(const CandidateGraph& g) {
  return 2.0 * static_cast<double>(g.edge_count());
}

BinaryPolynomial build_qubo(const CandidateGraph& g, double lambda1, double lambda2) {
  const std::vector<Edge> edges = g.edges();
  const std::size_t vars = edges.size();
  const std::size_t n = g.size();
  auto y = [&](std::size_t k) { return BinaryPolynomial::variable(vars, k); };
  auto square = [](const BinaryPolynomial& p) { return p * p; };

  BinaryPolynomial cost(vars);
  std::vector<BinaryPolynomial> balance(n, BinaryPolynomial(vars));
  BinaryPolynomial leave_start = BinaryPolynomial::constant(vars, -1.0);
  BinaryPolynomial enter_end = BinaryPolynomial::constant(vars, -1.0);
  for (std::size_t k = 0; k < vars; ++k) {
    const Edge& e = edges[k];
    cost += e.weight * y(k);
    balance[e.to] += y(k);
    balance[e.from] -= y(k);
    if (e.from == 0) leave_start += y(k);
    if (e.to == n - 1) enter_end += y(k);
  }

  BinaryPolynomial flow(vars);
  for (std::size_t j = 1; j + 1 < n; ++j) flow += square(balance[j]);
  BinaryPolynomial ends = square(leave_start) + square(enter_end);
  return cost + lambda1 * flow + lambda2 * ends;
}

double DecodedPath::cost() const {
  double total = 0.0;
  for (const Edge& e : edges) total += e.weight;
  return total;
}

std::vector<std::size_t> DecodedPath::vertices() const {
  std::vector<std::size_t> out{0};
  for (const Edge& e : edges) out.push_back(e.to);
  return out;
}

DecodedPath decode_assignment(const HoboModel& m, Assignment assignment) {
  DecodedPath path;
  const std::size_t last = m.graph.size() - 1;
  std::size_t at = 0;
  while (at != last) {
    const std::size_t code = m.layout.read_code(at, assignment);
    const auto& out = m.graph.forward(at);
    if (code >= out.size()) {
      path.invalid = InvalidCode{at, code};
      break;
    }
    path.edges.push_back(out[code]);
    at = out[code].to;
  }
  return path;
}

}  // namespace routehobo

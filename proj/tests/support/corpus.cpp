#include "corpus.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace corpus {

using routehobo::Edge;
using routehobo::Point;
using routehobo::Polyline;

Polyline collinear(std::size_t n, double spacing) {
  Polyline out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(spacing * static_cast<double>(i), 0.5 * spacing * static_cast<double>(i));
  return out;
}

Polyline sine(std::size_t n, double amplitude, double periods) {
  Polyline out;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    out.emplace_back(t, amplitude * std::sin(2.0 * std::numbers::pi * periods * t));
  }
  return out;
}

Polyline zigzag(std::size_t legs, std::size_t per_leg, double leg_length, double rise) {
  Polyline out;
  for (std::size_t leg = 0; leg < legs; ++leg) {
    const bool forward = leg % 2 == 0;
    for (std::size_t k = 0; k < per_leg; ++k) {
      const double along = leg_length * static_cast<double>(k) / static_cast<double>(per_leg);
      const double x = forward ? along : leg_length - along;
      const double y = rise * (static_cast<double>(leg) + static_cast<double>(k) / static_cast<double>(per_leg) * 0.2);
      out.emplace_back(x, y);
    }
  }
  return out;
}

Polyline random_walk(std::size_t n, std::uint64_t seed, double step, double turn) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> heading_change(0.0, turn);
  std::uniform_real_distribution<double> length(0.5 * step, 1.5 * step);
  Polyline out{Point(0.0, 0.0)};
  double heading = 0.0;
  while (out.size() < n) {
    heading += heading_change(rng);
    const double l = length(rng);
    out.push_back(out.back() + Point(l * std::cos(heading), l * std::sin(heading)));
  }
  return out;
}

std::vector<NamedRoute> synthetic_corpus() {
  std::vector<NamedRoute> out;
  out.push_back({"collinear-10", collinear(10)});
  out.push_back({"collinear-40", collinear(40, 0.25)});
  out.push_back({"sine-100", sine(100, 0.2, 1.5)});
  out.push_back({"sine-60", sine(60, 1.0, 3.0)});
  out.push_back({"zigzag-6x8", zigzag(6, 8, 1.0, 0.3)});
  out.push_back({"zigzag-4x12", zigzag(4, 12, 2.0, 0.5)});
  for (std::uint64_t seed : {11u, 23u, 37u}) {
    out.push_back({"walk-" + std::to_string(seed), random_walk(60, seed)});
  }
  return out;
}

routehobo::CandidateGraph toy_graph() {
  return routehobo::CandidateGraph::from_edges(
      5, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}, {2, 4, 1.0}, {3, 4, 1.0}});
}

Polyline toy_route() {
  return {Point(0, 0), Point(1, 0), Point(2, 0), Point(3, 0), Point(3.5, 1)};
}

routehobo::CandidateGraph skip_one_chain(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1, 1.0});
    if (i + 2 < n) edges.push_back({i, i + 2, 1.0});
  }
  return routehobo::CandidateGraph::from_edges(n, edges);
}

}  // namespace corpus

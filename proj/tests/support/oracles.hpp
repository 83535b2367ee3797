#pragma once

// Independent reference computations used by the unit and acceptance
// suites. Nothing here calls into the code paths it is used to check.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "routehobo/binary_polynomial.hpp"
#include "routehobo/geometry.hpp"
#include "routehobo/route_graph.hpp"

namespace oracle {

struct Path {
  std::vector<std::size_t> vertices;
  double cost = 0.0;
};

/// Every start-to-end path, by depth-first search over the edge list.
std::vector<Path> enumerate_paths(const routehobo::CandidateGraph& g);

/// Minimum path cost by forward dynamic programming over vertex order.
double dag_shortest_path(const routehobo::CandidateGraph& g, bool unit_weights = true);

/// Sum of ceil(log2 e_i) recomputed from a raw edge list with floating-point
/// log2, independent of the library's integer bit loop.
std::size_t hobo_binary_count(std::size_t n, const std::vector<routehobo::Edge>& edges);

/// Minimum of a polynomial over every assignment, tabulated by recursive
/// splitting on one variable at a time.
double brute_force_minimum(const routehobo::BinaryPolynomial& p);

/// Expands prod over bits of x or (1 - x) term by term for a single
/// assignment: returns 1 iff the vertex's bits read `code`.
int indicator_value(std::size_t offset, std::size_t width, std::size_t code, std::uint64_t assignment);

/// Random multilinear polynomial with the given variable count, up to
/// `max_terms` monomials of degree at most `max_degree`.
routehobo::BinaryPolynomial random_polynomial(std::mt19937_64& rng, std::size_t num_vars,
                                              std::size_t max_degree, std::size_t max_terms);

/// Random forward DAG: all adjacent edges plus each skip edge (i, j), j - i
/// <= max_skip, with probability `density`.
routehobo::CandidateGraph random_dag(std::mt19937_64& rng, std::size_t n, std::size_t max_skip, double density);

/// Checks that every point between consecutive kept indices is within
/// epsilon of their chord.
bool chords_cover_dropped(const routehobo::Polyline& route, const std::vector<std::size_t>& kept, double epsilon);

/// Smallest distance from any interior point to the chord of any forward
/// pair (i, j) with j >= i + 2, or +inf for routes under 3 points.
double min_interior_chord_distance(const routehobo::Polyline& route);
/// Largest such distance, or 0 for routes under 3 points.
double max_interior_chord_distance(const routehobo::Polyline& route);

}  // namespace oracle

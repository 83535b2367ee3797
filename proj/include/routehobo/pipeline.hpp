#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "routehobo/rdp.hpp"
#include "routehobo/route_graph.hpp"
#include "routehobo/solver.hpp"

namespace routehobo {

/// Mean adjacent distance every route is rescaled to before an ε sweep when
/// normalisation is requested.
inline constexpr double kReferenceMeanDistance = 0.000653;

enum class Segmentation {
  /// Theoretical cuts plus computational cuts to respect the qubit budget.
  Planned,
  /// Theoretical cuts only; the budget is ignored.
  TheoreticalOnly,
  /// One segment spanning the whole route.
  Unsplit,
};

struct CompressOptions {
  std::size_t qubit_budget = 12;
  SolveMethod method = SolveMethod::Exact;
  QaoaConfig qaoa;
  std::optional<std::size_t> max_offset;
  Segmentation segmentation = Segmentation::Planned;
};

struct SegmentSolve {
  std::size_t first = 0;
  std::size_t last = 0;
  SolveMethod method = SolveMethod::Exact;
  std::size_t variable_count = 0;
  bool fallback = false;
};

struct NodeCategories {
  std::size_t normal = 0;
  std::size_t theoretical_div = 0;
  std::size_t computational_div = 0;
};

struct CompressionReport {
  std::size_t total_points = 0;
  std::size_t selected_points = 0;
  std::size_t dropped_points = 0;
  NodeCategories categories;
  double ratio = 0.0;
  std::vector<SegmentSolve> segments;
};

struct CompressionResult {
  std::vector<std::size_t> kept_indices;
  CompressionReport report;
};

/// Thins edges, plans segments, solves each segment with the chosen method
/// and merges the per-segment paths. Segment k runs QAOA with seed
/// cfg.seed + k. Endpoints count as Normal; every other cut vertex is
/// labelled by its cut kind.
CompressionResult compress_route(const Polyline& route, double epsilon, const CompressOptions& options = {});

struct Comparison {
  double epsilon = 0.0;
  RdpStats rdp;
  CompressionReport proposed;
};

Comparison compare_methods(const Polyline& route, double epsilon, const CompressOptions& options = {});

struct SweepRow {
  double epsilon = 0.0;
  std::size_t rdp_selected = 0;
  std::size_t proposed_selected = 0;
  double ratio = 0.0;  // proposed / rdp
};

/// One row per ε, ascending. With `normalize_mean` set the route is first
/// rescaled to that mean adjacent distance.
std::vector<SweepRow> epsilon_sweep(const Polyline& route, std::vector<double> epsilons,
                                    std::optional<double> normalize_mean = std::nullopt,
                                    const CompressOptions& options = {});

/// `count` evenly spaced values from `start` to `stop` inclusive.
std::vector<double> linear_epsilons(double start, double stop, std::size_t count);

}  // namespace routehobo

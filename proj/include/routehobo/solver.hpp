#pragma once

#include <cstddef>
#include <vector>

#include "routehobo/hobo_model.hpp"
#include "routehobo/qaoa_sim.hpp"

namespace routehobo {

enum class SolveMethod { Exact, Qaoa };

inline constexpr std::size_t kMaxExactVariables = 24;

struct SolveResult {
  SolveMethod method = SolveMethod::Exact;
  Assignment best_assignment = 0;
  std::size_t num_vars = 0;
  double best_cost = 0.0;
  std::vector<Edge> selected_edges;
  /// Every minimizer of the full objective (exact solves only).
  std::vector<Assignment> optimal_assignments;
  /// True when a QAOA solve produced no valid sample and fell back to the
  /// exact solver.
  bool fallback = false;
  /// QAOA details; empty for exact solves.
  QaoaOutcome qaoa;
};

/// Enumerates all assignments of the full objective. Ties go to the
/// lexicographically smallest assignment (x_0 compared first).
SolveResult solve_exact(const HoboModel& m);

/// Samples the QAOA circuit and keeps the cheapest valid decode. Falls back
/// to solve_exact when no sample decodes to a complete path.
SolveResult solve_qaoa(const HoboModel& m, const QaoaConfig& cfg);

}  // namespace routehobo

#include "routehobo/solver.hpp"

#include <cmath>
#include <limits>

namespace routehobo {

namespace {

// Values within this of the minimum count as optimal; objective values are
// sums of edge weights, so distinct costs differ by far more.
constexpr double kTieTolerance = 1e-9;

void set_path(SolveResult& result, const HoboModel& m, Assignment a) {
  const DecodedPath path = decode_assignment(m, a);
  if (!path.valid()) throw Error("optimal assignment does not decode to a path");
  result.best_assignment = a;
  result.selected_edges = path.edges;
  result.best_cost = path.cost();
}

}  // namespace

SolveResult solve_exact(const HoboModel& m) {
  const std::size_t n = m.num_vars();
  if (n > kMaxExactVariables) throw Error("exact solve budget exceeded");

  const Eigen::VectorXd values = all_values(m.full_objective());
  const double minimum = values.minCoeff();

  SolveResult result;
  result.method = SolveMethod::Exact;
  result.num_vars = n;
  bool found = false;
  Assignment best = 0;
  for (Eigen::Index a = 0; a < values.size(); ++a) {
    if (values[a] > minimum + kTieTolerance) continue;
    const auto assignment = static_cast<Assignment>(a);
    result.optimal_assignments.push_back(assignment);
    if (!decode_assignment(m, assignment).valid()) continue;
    if (!found || lexicographically_less(assignment, best)) {
      best = assignment;
      found = true;
    }
  }
  if (!found) throw Error("no optimal assignment decodes to a path");
  set_path(result, m, best);
  return result;
}

SolveResult solve_qaoa(const HoboModel& m, const QaoaConfig& cfg) {
  const std::size_t n = m.num_vars();
  if (n == 0) {
    SolveResult forced = solve_exact(m);
    forced.method = SolveMethod::Qaoa;
    return forced;
  }

  SolveResult result;
  result.method = SolveMethod::Qaoa;
  result.num_vars = n;
  result.qaoa = run_qaoa(lower_to_ising(m.full_objective()), cfg);

  bool found = false;
  double best_cost = std::numeric_limits<double>::infinity();
  Assignment best = 0;
  for (const auto& [sample, count] : result.qaoa.samples) {
    const DecodedPath path = decode_assignment(m, sample);
    if (!path.valid()) continue;
    const double cost = path.cost();
    if (!found || cost < best_cost - kTieTolerance ||
        (std::abs(cost - best_cost) <= kTieTolerance && lexicographically_less(sample, best))) {
      best = sample;
      best_cost = cost;
      found = true;
    }
  }

  if (!found) {
    const SolveResult exact = solve_exact(m);
    result.fallback = true;
    result.optimal_assignments = exact.optimal_assignments;
    best = exact.best_assignment;
  }
  set_path(result, m, best);
  return result;
}

}  // namespace routehobo

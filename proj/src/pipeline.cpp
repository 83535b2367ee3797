#include "routehobo/pipeline.hpp"

#include <algorithm>

#include "routehobo/hobo_model.hpp"

namespace routehobo {

namespace {

SegmentPlan make_plan(const CandidateGraph& g, const CompressOptions& options) {
  switch (options.segmentation) {
    case Segmentation::Planned:
      return plan_segments(g, options.qubit_budget);
    case Segmentation::TheoreticalOnly:
      return theoretical_plan(g);
    case Segmentation::Unsplit:
      break;
  }
  SegmentPlan whole;
  whole.num_vertices = g.size();
  return whole;
}

}  // namespace

CompressionResult compress_route(const Polyline& route, double epsilon, const CompressOptions& options) {
  const CandidateGraph graph = build_candidate_graph(route, epsilon, options.max_offset);
  const SegmentPlan plan = make_plan(graph, options);

  CompressionResult result;
  CompressionReport& report = result.report;
  result.kept_indices.push_back(0);
  std::size_t index = 0;
  for (const auto& [first, last] : plan.segments()) {
    const HoboModel model = build_hobo(graph.subgraph(first, last));
    SolveResult solved;
    if (options.method == SolveMethod::Exact) {
      solved = solve_exact(model);
    } else {
      QaoaConfig cfg = options.qaoa;
      cfg.seed += index;
      solved = solve_qaoa(model, cfg);
    }
    for (const Edge& e : solved.selected_edges) result.kept_indices.push_back(first + e.to);
    report.segments.push_back({first, last, solved.method, model.num_vars(), solved.fallback});
    ++index;
  }

  report.total_points = route.size();
  report.selected_points = result.kept_indices.size();
  report.dropped_points = report.total_points - report.selected_points;
  report.ratio = static_cast<double>(report.selected_points) / static_cast<double>(report.total_points);
  for (const Boundary& b : plan.boundaries) {
    if (b.kind == DivisionKind::Theoretical) {
      ++report.categories.theoretical_div;
    } else {
      ++report.categories.computational_div;
    }
  }
  report.categories.normal =
      report.selected_points - report.categories.theoretical_div - report.categories.computational_div;
  return result;
}

Comparison compare_methods(const Polyline& route, double epsilon, const CompressOptions& options) {
  Comparison out;
  out.epsilon = epsilon;
  out.rdp = rdp_compression_stats(route, epsilon);
  out.proposed = compress_route(route, epsilon, options).report;
  return out;
}

std::vector<SweepRow> epsilon_sweep(const Polyline& route, std::vector<double> epsilons,
                                    std::optional<double> normalize_mean, const CompressOptions& options) {
  if (epsilons.empty()) throw Error("epsilon list is empty");
  std::sort(epsilons.begin(), epsilons.end());
  const Polyline scaled = normalize_mean ? scale_route(route, *normalize_mean) : route;
  std::vector<SweepRow> rows;
  rows.reserve(epsilons.size());
  for (double eps : epsilons) {
    const Comparison c = compare_methods(scaled, eps, options);
    rows.push_back({eps, c.rdp.selected, c.proposed.selected_points,
                    static_cast<double>(c.proposed.selected_points) / static_cast<double>(c.rdp.selected)});
  }
  return rows;
}

std::vector<double> linear_epsilons(double start, double stop, std::size_t count) {
  if (count == 0) throw Error("epsilon range needs at least one step");
  if (count == 1) return {start};
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = start + (stop - start) * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  return out;
}

}  // namespace routehobo

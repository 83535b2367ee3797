#include "routehobo/rdp.hpp"

#include <utility>

namespace routehobo {

RdpResult rdp_simplify(const Polyline& route, double epsilon) {
  const std::size_t n = route.size();
  if (n < 2) throw Error("route too short");
  if (epsilon < 0.0) throw Error("negative threshold");

  // Ranges are pushed right-then-left so the left half is finished first,
  // which reproduces the recursion's output order.
  RdpResult result;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n - 1}};
  result.kept_indices.push_back(0);
  while (!stack.empty()) {
    const auto [first, last] = stack.back();
    stack.pop_back();

    const Segment chord{route[first], route[last]};
    double d_max = 0.0;
    std::size_t split = first;
    for (std::size_t i = first + 1; i < last; ++i) {
      const double d = perpendicular_distance(route[i], chord);
      if (d > d_max) {
        d_max = d;
        split = i;
      }
    }

    if (d_max > epsilon) {
      stack.emplace_back(split, last);
      stack.emplace_back(first, split);
    } else {
      result.kept_indices.push_back(last);
    }
  }
  return result;
}

RdpStats rdp_compression_stats(const Polyline& route, double epsilon) {
  const RdpResult r = rdp_simplify(route, epsilon);
  RdpStats stats;
  stats.selected = r.kept_indices.size();
  stats.dropped = route.size() - stats.selected;
  stats.ratio = static_cast<double>(stats.selected) / static_cast<double>(route.size());
  return stats;
}

}  // namespace routehobo

#pragma once

#include <cstddef>
#include <vector>

#include "routehobo/geometry.hpp"

namespace routehobo {

struct RdpResult {
  /// Original point indices kept, strictly increasing; always contains 0 and
  /// n - 1.
  std::vector<std::size_t> kept_indices;
};

struct RdpStats {
  std::size_t selected = 0;
  std::size_t dropped = 0;
  double ratio = 0.0;
};

/// Ramer-Douglas-Peucker simplification. A range is split at its farthest
/// interior point (first maximizer on ties) when that distance exceeds
/// `epsilon`. Runs on an explicit stack, so long routes cannot overflow the
/// call stack; the output matches the textbook recursion exactly.
RdpResult rdp_simplify(const Polyline& route, double epsilon);

RdpStats rdp_compression_stats(const Polyline& route, double epsilon);

}  // namespace routehobo

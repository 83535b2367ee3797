#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "routehobo/error.hpp"

namespace routehobo {

template <typename Scalar>
using PointT = Eigen::Matrix<Scalar, 2, 1>;

/// Route vertex as (x, y) = (longitude, latitude) in raw degrees, or an
/// abstract plane coordinate.
using Point = PointT<double>;

template <typename Scalar>
using PolylineT = std::vector<PointT<Scalar>>;

using Polyline = PolylineT<double>;

template <typename Scalar>
struct SegmentT {
  PointT<Scalar> a;
  PointT<Scalar> b;
};

using Segment = SegmentT<double>;

/// Distance from `p` to the infinite line through `s.a` and `s.b`. A
/// degenerate segment (a == b) yields the Euclidean distance to `s.a`.
template <typename Scalar>
Scalar perpendicular_distance(const PointT<Scalar>& p, const SegmentT<Scalar>& s) {
  const PointT<Scalar> dir = s.b - s.a;
  const Scalar len = dir.norm();
  const PointT<Scalar> rel = p - s.a;
  if (len == Scalar(0)) return rel.norm();
  const Scalar cross = dir.x() * rel.y() - dir.y() * rel.x();
  return std::abs(cross) / len;
}

template <typename Scalar>
bool is_finite(const PointT<Scalar>& p) {
  return std::isfinite(p.x()) && std::isfinite(p.y());
}

/// Arithmetic mean of the Euclidean lengths of consecutive point pairs.
template <typename Scalar>
Scalar mean_adjacent_distance(const PolylineT<Scalar>& route) {
  if (route.size() < 2) throw Error("degenerate route");
  Scalar total(0);
  for (std::size_t i = 1; i < route.size(); ++i) total += (route[i] - route[i - 1]).norm();
  return total / static_cast<Scalar>(route.size() - 1);
}

/// Scales every coordinate about the origin so that the mean adjacent
/// distance becomes `target_mean`.
template <typename Scalar>
PolylineT<Scalar> scale_route(const PolylineT<Scalar>& route, Scalar target_mean) {
  if (!(target_mean > Scalar(0))) throw Error("target mean distance must be positive");
  const Scalar mean = mean_adjacent_distance(route);
  if (!(mean > Scalar(0))) throw Error("cannot scale degenerate route");
  const Scalar factor = target_mean / mean;
  PolylineT<Scalar> out;
  out.reserve(route.size());
  for (const auto& p : route) out.push_back(p * factor);
  return out;
}

}  // namespace routehobo

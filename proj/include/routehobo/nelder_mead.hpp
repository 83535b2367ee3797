#pragma once

#include <cstddef>
#include <functional>

#include <Eigen/Core>

namespace routehobo {

struct NelderMeadOptions {
  double initial_step = 0.2;
  std::size_t max_evaluations = 200;
  /// Stop once the spread of simplex values falls below this.
  double value_tolerance = 1e-8;
};

struct NelderMeadResult {
  Eigen::VectorXd argmin;
  double minimum = 0.0;
  std::size_t evaluations = 0;
};

/// Downhill simplex minimizer (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2). Deterministic for a given objective and start.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                             const Eigen::VectorXd& start, const NelderMeadOptions& options = {});

}  // namespace routehobo

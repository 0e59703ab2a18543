#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hstretch/analytic.hpp"

namespace hstretch::fitting {

enum class Model { kLinearTheorem1, kEq3, kIpeaLog };

std::string to_string(Model m);
Model parse_model(const std::string& name);

struct FitResult {
  double alpha_hat = 0.0;
  double residual_sse = 0.0;
  double r_squared = 0.0;  // 1 - SSE/SST; 1 when both vanish, 0 when SST vanishes alone
  std::size_t n_points = 0;
  Model model = Model::kLinearTheorem1;
  std::vector<std::string> warnings;
};

struct HeightStretch {
  double h;
  double s_p;
};

// Least squares for s_p = 1 + alpha (h - 1), intercept pinned at (1, 1):
// alpha = sum (h-1)(s_p-1) / sum (h-1)^2.
// Needs at least one point with h > 1 and a positive slope.
FitResult fit_alpha_linear(const std::vector<HeightStretch>& points);

// Least squares over alpha of observed s_t against the composite curve at N.
// Coarse grid on (0, 5] with step 1e-4, then golden-section refinement to 1e-7
// around the best grid cell. The range is doubled (with a warning) while the
// optimum sits on its upper edge, up to 80.
FitResult fit_alpha_eq3(const std::vector<analytic::StretchPair>& points, std::uint64_t n_nodes);

// Least squares for s_p = 1 - alpha ln s_t, the p-equal-clusters relation.
FitResult fit_alpha_ipea(const std::vector<analytic::StretchPair>& points);

struct CurveDeviation {
  std::vector<double> residuals;  // observed s_t minus the interpolated series value
  double max_abs = 0.0;
};

// Linear interpolation of the series in s_p. Points outside its s_p range throw.
CurveDeviation curve_deviation(const analytic::CurveSeries& series, const std::vector<analytic::StretchPair>& points);

}  // namespace hstretch::fitting

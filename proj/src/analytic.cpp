#include "hstretch/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hstretch/errors.hpp"
#include "hstretch/golden_section.hpp"

namespace hstretch::analytic {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

void AnalyticParams::check() const {
  require(n_nodes >= 1, "n_nodes must be >= 1");
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive and finite");
  require(levels >= 1.0, "levels must be >= 1");
}

double TreeDistanceModel::beta(double alpha) const {
  require(avg_path_len > 0.0, "avg_path_len must be positive");
  require(alpha > 0.0, "alpha must be positive");
  return alpha / avg_path_len;
}

double path_stretch_from_height(double h, double alpha) {
  require(h >= 1.0, "path_stretch_from_height: h must be >= 1");
  require(alpha > 0.0, "path_stretch_from_height: alpha must be positive");
  return 1.0 + alpha * (h - 1.0);
}

double height_from_path_stretch(double s_p, double alpha) {
  require(s_p >= 1.0, "height_from_path_stretch: s_p must be >= 1");
  require(alpha > 0.0, "height_from_path_stretch: alpha must be positive");
  return 1.0 + (s_p - 1.0) / alpha;
}

double table_stretch_kk(std::uint64_t n_nodes, double m) {
  require(n_nodes >= 1, "table_stretch_kk: n_nodes must be >= 1");
  require(m >= 1.0, "table_stretch_kk: m must be >= 1");
  return m * std::pow(static_cast<double>(n_nodes), 1.0 / m - 1.0);
}

double optimal_table_length_fixed(std::uint64_t n_nodes, double m) {
  require(n_nodes >= 1, "optimal_table_length_fixed: n_nodes must be >= 1");
  require(m >= 1.0, "optimal_table_length_fixed: m must be >= 1");
  return m * std::pow(static_cast<double>(n_nodes), 1.0 / m);
}

double optimal_table_length_variable(std::uint64_t n_nodes) {
  require(n_nodes >= 2, "optimal_table_length_variable: n_nodes must be >= 2");
  return std::numbers::e * std::log(static_cast<double>(n_nodes));
}

double table_stretch_from_path_stretch(double s_p, const AnalyticParams& params) {
  params.check();
  return table_stretch_kk(params.n_nodes, height_from_path_stretch(s_p, params.alpha));
}

double path_stretch_from_table_stretch_ipea(double s_t, double alpha) {
  require(s_t > 0.0 && s_t <= 1.0, "path_stretch_from_table_stretch_ipea: s_t must lie in (0, 1]");
  require(alpha > 0.0, "path_stretch_from_table_stretch_ipea: alpha must be positive");
  return 1.0 - alpha * std::log(s_t);
}

double cluster_path_distance(int clusters_crossed, double intra_dist) {
  require(clusters_crossed >= 1, "cluster_path_distance: k must be >= 1");
  require(intra_dist >= 0.0, "cluster_path_distance: d_i must be >= 0");
  return (1.0 + intra_dist) * clusters_crossed - 1.0;
}

double tree_pair_distance(int depth1, int depth2, double intra_dist) {
  require(depth1 >= 0 && depth2 >= 0, "tree_pair_distance: depths must be >= 0");
  require(depth1 + depth2 >= 1, "tree_pair_distance: nodes must be distinct (h1 + h2 >= 1)");
  require(intra_dist >= 0.0, "tree_pair_distance: d_i must be >= 0");
  return depth1 * (intra_dist + 1.0) + depth2 * (intra_dist + 1.0) - 2.0;
}

double tree_diameter(int height, double intra_dist) {
  require(height >= 1, "tree_diameter: h must be >= 1");
  require(intra_dist >= 0.0, "tree_diameter: d_i must be >= 0");
  return 2.0 * height * (intra_dist + 1.0) + intra_dist;
}

CurveSeries sweep_curve(const AnalyticParams& params, const SweepRange& range) {
  params.check();
  require(range.s_p_min >= 1.0, "sweep_curve: s_p_min must be >= 1");
  require(range.s_p_min < range.s_p_max, "sweep_curve: s_p_min must be < s_p_max");
  require(range.step > 0.0, "sweep_curve: step must be positive");

  const auto count = static_cast<std::size_t>(std::floor((range.s_p_max - range.s_p_min) / range.step + 1e-9)) + 1;
  CurveSeries series{params.n_nodes, params.alpha, {}};
  series.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double s_p = range.s_p_min + static_cast<double>(i) * range.step;
    const double m = height_from_path_stretch(s_p, params.alpha);
    series.points.push_back({s_p, m, table_stretch_kk(params.n_nodes, m)});
  }
  return series;
}

TableStretchMinimum find_min_table_stretch(const AnalyticParams& params) {
  params.check();
  require(params.n_nodes >= 2, "find_min_table_stretch: n_nodes must be >= 2");

  const double log_n = std::log(static_cast<double>(params.n_nodes));
  const double hi = std::max(2.0, 4.0 * log_n);
  const auto best = golden_section_minimize(
      [&](double m) { return table_stretch_kk(params.n_nodes, m); }, 1.0, hi, 1e-9);
  return {path_stretch_from_height(best.x, params.alpha), best.x, best.fx};
}

TableStretchMinimum min_table_stretch_closed_form(const AnalyticParams& params) {
  params.check();
  require(params.n_nodes >= 2, "min_table_stretch_closed_form: n_nodes must be >= 2");

  const double n = static_cast<double>(params.n_nodes);
  const double log_n = std::log(n);
  if (log_n < 1.0) return {1.0, 1.0, 1.0};
  return {path_stretch_from_height(log_n, params.alpha), log_n, std::numbers::e * log_n / n};
}

double min_fixed_table_length_numeric(std::uint64_t n_nodes) {
  require(n_nodes >= 2, "min_fixed_table_length_numeric: n_nodes must be >= 2");
  const double n = static_cast<double>(n_nodes);
  const double hi = std::max(2.0, 4.0 * std::log(n));
  // m N^(1/m) is unimodal on m > 0 with its turning point at ln N >= ln 2.
  return golden_section_minimize([n](double m) { return m * std::pow(n, 1.0 / m); }, 0.25, hi, 1e-10).fx;
}

}  // namespace hstretch::analytic

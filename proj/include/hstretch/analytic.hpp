#pragma once

// Closed-form stretch relations for hierarchical routing.
//
// Two stretch factors are related through the hierarchy height:
//   path stretch   s_p = 1 + alpha (h - 1)          (linear in height)
//   table stretch  s_t = m N^(1/m - 1)              (optimal fixed-level tables)
// and, identifying the height h with the level count m, the composite
//   s_t = (1 + (s_p - 1)/alpha) N^(1/(1 + (s_p - 1)/alpha) - 1).
//
// Logarithms are natural throughout. A different base only rescales alpha.
// Level counts are real-valued: inverting the path relation yields non-integer m.

#include <cstdint>
#include <vector>

namespace hstretch::analytic {

inline constexpr double kDefaultAlpha = 0.987;

struct AnalyticParams {
  std::uint64_t n_nodes = 10;
  double alpha = kDefaultAlpha;
  double levels = 1.0;

  // Throws DomainError unless n_nodes >= 1, alpha > 0, levels >= 1.
  void check() const;
};

struct StretchPair {
  double s_p;
  double s_t;
};

struct CurvePoint {
  double s_p;
  double m;
  double s_t;
};

struct CurveSeries {
  std::uint64_t n_nodes;
  double alpha;
  std::vector<CurvePoint> points;  // strictly increasing s_p
};

// Tree-distance model behind the linearity of path stretch in height.
struct TreeDistanceModel {
  double intra_cluster_dist = 0.0;  // mean distance inside a cluster
  int height = 1;
  double avg_path_len = 1.0;  // mean shortest-path length of the flat graph

  // Slope of s_p in (h - 1) once the additive per-level penalty alpha is
  // normalised by the flat mean path length.
  double beta(double alpha) const;
};

double path_stretch_from_height(double h, double alpha);
double height_from_path_stretch(double s_p, double alpha);

double table_stretch_kk(std::uint64_t n_nodes, double m);
double optimal_table_length_fixed(std::uint64_t n_nodes, double m);
double optimal_table_length_variable(std::uint64_t n_nodes);

// Uses params.n_nodes and params.alpha; params.levels is ignored (derived from s_p).
double table_stretch_from_path_stretch(double s_p, const AnalyticParams& params);

// s_p = 1 - alpha ln(s_t), for the p-equal-clusters model where s_t = 1/p.
double path_stretch_from_table_stretch_ipea(double s_t, double alpha);

double cluster_path_distance(int clusters_crossed, double intra_dist);
double tree_pair_distance(int depth1, int depth2, double intra_dist);
double tree_diameter(int height, double intra_dist);

struct SweepRange {
  double s_p_min = 1.0;
  double s_p_max = 5.0;
  double step = 0.01;
};

// Grid s_p = s_p_min + i*step for every i with s_p <= s_p_max (1e-9 slack so
// the nominal end point survives rounding).
CurveSeries sweep_curve(const AnalyticParams& params, const SweepRange& range = {});

struct TableStretchMinimum {
  double s_p;
  double m;
  double s_t;
};

// Golden-section minimisation of the composite curve over m in [1, max(2, 4 ln N)].
// Requires N >= 2. For N < e the constrained optimum is the boundary m = 1.
TableStretchMinimum find_min_table_stretch(const AnalyticParams& params);

// Closed-form minimiser: m* = ln N, s_t* = e ln N / N, s_p* = 1 + alpha (ln N - 1),
// clamped to m* = 1 when ln N < 1.
TableStretchMinimum min_table_stretch_closed_form(const AnalyticParams& params);

// Unconstrained minimum over real m > 0 of m N^(1/m), found numerically.
// Equals e ln N for every N >= 2.
double min_fixed_table_length_numeric(std::uint64_t n_nodes);

}  // namespace hstretch::analytic

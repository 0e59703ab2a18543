#include "hstretch/fitting.hpp"

#include <algorithm>
#include <cmath>

#include "hstretch/errors.hpp"
#include "hstretch/format.hpp"
#include "hstretch/golden_section.hpp"

namespace hstretch::fitting {

namespace {

double r_squared(double sse, const std::vector<double>& observed) {
  double mean = 0.0;
  for (double y : observed) mean += y;
  mean /= static_cast<double>(observed.size());
  double sst = 0.0;
  for (double y : observed) sst += (y - mean) * (y - mean);
  if (sst == 0.0) return sse == 0.0 ? 1.0 : 0.0;
  return 1.0 - sse / sst;
}

// Slope of y = alpha x through the origin.
FitResult fit_through_origin(const std::vector<double>& x, const std::vector<double>& y,
                             const std::vector<double>& observed, Model model) {
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += x[i] * y[i];
    sxx += x[i] * x[i];
  }
  if (sxx == 0.0) throw DomainError(to_string(model) + " fit: degenerate input, no point away from the boundary");
  const double alpha = sxy / sxx;
  if (!(alpha > 0.0)) throw DomainError(to_string(model) + " fit: non-positive slope " + format_number(alpha));

  double sse = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sse += (y[i] - alpha * x[i]) * (y[i] - alpha * x[i]);
  return {alpha, sse, r_squared(sse, observed), x.size(), model, {}};
}

}  // namespace

std::string to_string(Model m) {
  switch (m) {
    case Model::kLinearTheorem1: return "linear-theorem1";
    case Model::kEq3: return "eq3";
    case Model::kIpeaLog: return "ipea-log";
  }
  return "unknown";
}

Model parse_model(const std::string& name) {
  if (name == "linear" || name == "linear-theorem1") return Model::kLinearTheorem1;
  if (name == "eq3") return Model::kEq3;
  if (name == "ipea" || name == "ipea-log") return Model::kIpeaLog;
  throw DomainError("unknown model '" + name + "' (expected linear, eq3 or ipea)");
}

FitResult fit_alpha_linear(const std::vector<HeightStretch>& points) {
  if (points.empty()) throw DomainError("linear fit: no points");
  std::vector<double> x, y, observed;
  for (const auto& p : points) {
    if (!(p.h >= 1.0) || !(p.s_p >= 1.0)) throw DomainError("linear fit: points need h >= 1 and s_p >= 1");
    x.push_back(p.h - 1.0);
    y.push_back(p.s_p - 1.0);
    observed.push_back(p.s_p);
  }
  return fit_through_origin(x, y, observed, Model::kLinearTheorem1);
}

FitResult fit_alpha_ipea(const std::vector<analytic::StretchPair>& points) {
  if (points.empty()) throw DomainError("ipea fit: no points");
  std::vector<double> x, y, observed;
  for (const auto& p : points) {
    if (!(p.s_t > 0.0 && p.s_t <= 1.0)) throw DomainError("ipea fit: s_t must lie in (0, 1]");
    x.push_back(-std::log(p.s_t));
    y.push_back(p.s_p - 1.0);
    observed.push_back(p.s_p);
  }
  return fit_through_origin(x, y, observed, Model::kIpeaLog);
}

FitResult fit_alpha_eq3(const std::vector<analytic::StretchPair>& points, std::uint64_t n_nodes) {
  if (points.empty()) throw DomainError("eq3 fit: no points");
  if (n_nodes < 1) throw DomainError("eq3 fit: n_nodes must be >= 1");
  bool informative = false;
  for (const auto& p : points) {
    if (!(p.s_p >= 1.0)) throw DomainError("eq3 fit: s_p must be >= 1");
    informative |= p.s_p > 1.0;
  }
  if (!informative) throw DomainError("eq3 fit: degenerate input, all s_p = 1 leaves alpha unidentifiable");

  auto sse = [&](double alpha) {
    double total = 0.0;
    for (const auto& p : points) {
      const double m = analytic::height_from_path_stretch(p.s_p, alpha);
      const double r = p.s_t - analytic::table_stretch_kk(n_nodes, m);
      total += r * r;
    }
    return total;
  };

  constexpr double kStep = 1e-4;
  constexpr double kMaxAlpha = 80.0;
  FitResult result;
  result.model = Model::kEq3;
  result.n_points = points.size();

  double best_alpha = kStep, best_sse = sse(kStep);
  double lo_index = 1, hi = 5.0;
  for (;;) {
    const auto last = static_cast<long>(std::llround(hi / kStep));
    for (long k = static_cast<long>(lo_index); k <= last; ++k) {
      const double alpha = static_cast<double>(k) * kStep;
      const double e = sse(alpha);
      if (e < best_sse) best_sse = e, best_alpha = alpha;
    }
    if (std::abs(best_alpha - hi) > 0.5 * kStep || hi >= kMaxAlpha) break;
    result.warnings.push_back("alpha optimum at search bound " + format_number(hi) + "; widening to " +
                              format_number(2 * hi));
    lo_index = static_cast<double>(last + 1);
    hi *= 2;
  }
  if (std::abs(best_alpha - hi) <= 0.5 * kStep)
    result.warnings.push_back("alpha optimum still on the search bound " + format_number(hi));

  const auto refined =
      golden_section_minimize(sse, std::max(best_alpha - kStep, 0.5 * kStep), best_alpha + kStep, 1e-7);
  if (refined.fx <= best_sse) best_alpha = refined.x, best_sse = refined.fx;

  std::vector<double> observed;
  for (const auto& p : points) observed.push_back(p.s_t);
  result.alpha_hat = best_alpha;
  result.residual_sse = best_sse;
  result.r_squared = r_squared(best_sse, observed);
  return result;
}

CurveDeviation curve_deviation(const analytic::CurveSeries& series, const std::vector<analytic::StretchPair>& points) {
  const auto& pts = series.points;
  if (pts.size() < 2) throw DomainError("curve_deviation: series needs at least two points");

  CurveDeviation out;
  for (const auto& p : points) {
    if (p.s_p < pts.front().s_p || p.s_p > pts.back().s_p)
      throw DomainError("curve_deviation: s_p " + format_number(p.s_p) + " outside series range [" +
                        format_number(pts.front().s_p) + ", " + format_number(pts.back().s_p) + "]");
    auto hi = std::lower_bound(pts.begin(), pts.end(), p.s_p,
                               [](const analytic::CurvePoint& c, double s) { return c.s_p < s; });
    double fitted;
    if (hi->s_p == p.s_p) {
      fitted = hi->s_t;
    } else {
      const auto lo = hi - 1;
      const double t = (p.s_p - lo->s_p) / (hi->s_p - lo->s_p);
      fitted = lo->s_t + t * (hi->s_t - lo->s_t);
    }
    const double r = p.s_t - fitted;
    out.residuals.push_back(r);
    out.max_abs = std::max(out.max_abs, std::abs(r));
  }
  return out;
}

}  // namespace hstretch::fitting

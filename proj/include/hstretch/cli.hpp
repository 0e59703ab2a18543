#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hstretch/analytic.hpp"

namespace hstretch::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kIo = 3,
};

inline const std::vector<std::uint64_t> kDefaultCurveNs{10, 100, 1000, 10000, 100000};

std::vector<analytic::CurveSeries> curve_series(const std::vector<std::uint64_t>& ns, double alpha,
                                                const analytic::SweepRange& range);

// Long format, header `N,alpha,s_p,m,s_t`, one row per point.
void write_curve_csv(std::ostream& os, const std::vector<analytic::CurveSeries>& series);

// Fixed 800x600 line chart, one polyline per series, x = s_p, y = s_t.
void write_curve_svg(std::ostream& os, const std::vector<analytic::CurveSeries>& series);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

// Boundary conditions, inverse pair, optimality link, curve minimum and the
// ring/grid simulator oracles. Throws DomainError if alpha is not positive.
std::vector<CheckResult> run_builtin_checks(double alpha);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hstretch::cli

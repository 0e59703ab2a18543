#pragma once

#include <cmath>
#include <utility>

#include "hstretch/errors.hpp"

namespace hstretch {

struct ScalarMinimum {
  double x;
  double fx;
};

// Golden-section search for the minimum of a unimodal function on [lo, hi].
// Stops once the bracket is narrower than abs_tol.
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double abs_tol, int max_iter = 500) {
  if (!(lo < hi)) throw DomainError("golden_section_minimize: empty bracket");
  if (!(abs_tol > 0.0)) throw DomainError("golden_section_minimize: tolerance must be positive");

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);

  for (int i = 0; i < max_iter && (b - a) > abs_tol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }

  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace hstretch

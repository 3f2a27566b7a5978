#pragma once

#include <functional>

namespace otreg {

struct QuadResult {
  double value = 0;
  bool hit_infinity = false;
  int panels = 0;
};

/// Composite Simpson with dyadic refinement: panel count doubles until two
/// successive estimates agree to rel_tol (relative) or max_panels is reached.
/// A non-finite sample aborts with hit_infinity set.
QuadResult simpson_dyadic(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-8, int max_panels = 1 << 20);

}  // namespace otreg

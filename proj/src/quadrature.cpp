#include "otreg/quadrature.hpp"

#include <cmath>
#include <vector>

#include "otreg/modulus.hpp"

namespace otreg {

QuadResult simpson_dyadic(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_panels) {
  if (a == b) return {0.0, false, 0};
  // samples[i] = f(a + i*h) over the current dyadic level; refined in place.
  std::vector<double> samples(3);
  samples[0] = f(a);
  samples[1] = f(0.5 * (a + b));
  samples[2] = f(b);
  for (double v : samples)
    if (!std::isfinite(v) && v > 0) return {kInf, true, 2};

  auto simpson_sum = [&](int n_panels) {
    const double h = (b - a) / n_panels;
    double s = samples.front() + samples.back();
    for (int i = 1; i < n_panels; ++i) s += (i % 2 ? 4.0 : 2.0) * samples[i];
    return s * h / 3.0;
  };

  int panels = 2;
  double prev = simpson_sum(panels);
  while (panels < max_panels) {
    panels *= 2;
    std::vector<double> next(static_cast<std::size_t>(panels) + 1);
    const double h = (b - a) / panels;
    for (int i = 0; i <= panels; ++i) {
      if (i % 2 == 0) {
        next[i] = samples[i / 2];
      } else {
        next[i] = f(a + i * h);
        if (!std::isfinite(next[i]) && next[i] > 0) return {kInf, true, panels};
      }
    }
    samples.swap(next);
    const double cur = simpson_sum(panels);
    if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1e-12))
      return {cur, false, panels};
    prev = cur;
  }
  return {prev, false, panels};
}

}  // namespace otreg

#pragma once

#include <functional>
#include <vector>

#include "otreg/modulus.hpp"

namespace otreg {

/// Pointwise monotone conjugate m*(v) = sup_{u>=0} { u v - m(u) }.
/// Closed forms for the parametric families; node scan for tabulated moduli
/// (exact under the piecewise-linear convention, since u -> u v - m(u) is
/// linear on each table segment).
double conjugate_value(const Modulus& m, double v);

/// Monotone conjugate sampled on dual_grid, returned as a Tabulated modulus.
/// A node at v = 0 is inserted when absent.  Empty grid -> invalid_argument.
Modulus monotone_conjugate(const Modulus& m, std::vector<double> dual_grid);

/// Exact evaluator for (m*)*, the largest convex lsc minorant of m.
/// Parametric convex families are returned unchanged; QuadraticMinusLinear
/// uses its piecewise closed form; tabulated moduli use the lower convex
/// envelope of their nodes.
std::function<double(double)> biconjugate_evaluator(const Modulus& m);

/// (m*)* sampled on grid (parametric families that are already convex lsc are
/// returned unchanged, ignoring the grid).
Modulus biconjugate(const Modulus& m, const std::vector<double>& grid);

/// sup{ u >= 0 : m(u) <= t } for a non-decreasing m; +inf when m <= t
/// everywhere.  Throws std::invalid_argument when m is not non-decreasing and
/// std::domain_error for t < 0.
double generalized_inverse(const Modulus& m, double t);

/// Core bisection on an arbitrary non-decreasing evaluator (60 iterations).
double generalized_inverse_fn(const std::function<double(double)>& m, double t);

/// (f [] g)(x) = inf_{y in grid, y <= x} { f(y) + g(x - y) } on grid.
Modulus inf_convolution(const Modulus& f, const Modulus& g,
                        const std::vector<double>& grid);

struct ComposeResult {
  double value = 0;
  bool hit_infinity = false;
};

/// sigma_bar(r) = int_0^r ginv(biconj(rho_W), sigma_V(s)) ds by adaptive
/// Simpson.  Returns +inf with a flag when the integrand blows up.
ComposeResult compose_regularity_bound(const Modulus& sigma_V, const Modulus& rho_W,
                                       double r);

struct RadialModuli {
  double rho = 0;
  double sigma = 0;
};

/// Moduli of a radial potential built from an increasing superhomogeneous
/// slope table alpha: rho(r) = 2 * int_0^{r/2} alpha, sigma(r) = 2 * int_0^r
/// alpha^{-1}.  Both integrals are exact for the piecewise-linear table.
RadialModuli radial_modulus(const std::vector<double>& ts,
                            const std::vector<double>& alphas, double r);

}  // namespace otreg

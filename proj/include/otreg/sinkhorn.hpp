#pragma once

#include <Eigen/Dense>
#include <string>

#include "otreg/measures.hpp"

namespace otreg {

struct EntropicValue {
  double value = 0;
  bool all_minus_inf = false;
};

/// Entropic Legendre transform eps*log sum_y exp((<x,y> - psi(y))/eps) w(y),
/// max-shift stabilized.
EntropicValue entropic_legendre(const Eigen::VectorXd& psi_values,
                                const DiscreteMeasure& measure, double eps,
                                const Eigen::VectorXd& x);

struct EntropicSolution {
  DiscreteMeasure mu, nu;
  double epsilon = 0;
  Eigen::VectorXd phi, psi;
  long iterations = 0;
  double final_residual = 0;
  double tolerance = 0;
  bool converged = false;
};

/// Log-domain Sinkhorn for the inner-product potentials: alternating
/// phi <- eps LSE(psi), psi <- eps LSE(phi) until the sup-norm change of phi
/// falls below tol (default 1e-9 * eps) or max_sweeps.  The gauge is fixed by
/// anchoring phi to 0 at the grid point nearest the mu-barycenter; psi absorbs
/// the opposite shift, so all dual sums are unchanged.
EntropicSolution sinkhorn(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                          double eps, double tol = -1.0, long max_sweeps = 100000);

/// Coupling weights; entries >= 0, marginals match within the solver residual.
Eigen::MatrixXd plan(const EntropicSolution& sol);

/// Fixed-point residual max_x |phi(x) - eps LSE[...]| recomputed from scratch.
double sinkhorn_residual(const EntropicSolution& sol);

/// T_eps(x_i) = sum_y y pi(x_i, y) / mu(x_i); rows of the returned matrix.
Eigen::MatrixXd barycentric_map(const EntropicSolution& sol);

/// C_eps = sum 1/2|x-y|^2 pi + eps * sum pi log(pi / (mu (x) nu)).
double entropic_cost(const EntropicSolution& sol);

/// Solution dump: JSON {epsilon, grid, phi, psi, residual, iterations,
/// converged}.
void dump_solution_json(const EntropicSolution& sol, const std::string& path);

}  // namespace otreg

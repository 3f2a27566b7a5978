#pragma once

#include <Eigen/Dense>

#include "otreg/spd.hpp"

namespace otreg {

/// Smaller root of r^2 - (2 + a eps^2) r + 1 = 0, computed as 1/s with s the
/// large root so that eps^2 a << 1 stays cancellation-free.  Lies in (0,1).
double characteristic_root(double a, double eps);

/// Closed-form value of the l^2-sequence minimization
///   S_eps(d) = inf { eps sum S(u_i) + 1/eps sum R*(u_i - u_{i+1}) : u_0 = d }
/// with S = 1/2 <., A^{-1} .>, R* = 1/2 <., B .>, via the characteristic
/// roots of M = B^{-1/2} A^{-1} B^{-1/2}.
double aniso_S_eps_closed(const SpdMatrix& A, const SpdMatrix& B, double eps,
                          const Eigen::VectorXd& d);

/// Quadratic form H_eps with S_eps(d) = 1/2 <d, H_eps d>; its eps -> 0 limit
/// is B^{1/2} M^{1/2} B^{1/2}.
Eigen::MatrixXd aniso_S_eps_hessian(const SpdMatrix& A, const SpdMatrix& B, double eps);
Eigen::MatrixXd aniso_S_limit_hessian(const SpdMatrix& A, const SpdMatrix& B);

/// Independent oracle: the truncated problem (u_0 = d, u_N = 0) solved exactly
/// through its block-tridiagonal first-order system.
double aniso_S_eps_truncated(const SpdMatrix& A, const SpdMatrix& B, double eps,
                             const Eigen::VectorXd& d, int N);

}  // namespace otreg

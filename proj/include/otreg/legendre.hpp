#pragma once

#include <Eigen/Dense>
#include <vector>

namespace otreg {

/// Discrete Legendre transform on a 1D grid: g[j] = max_i (vs[j]*xs[i] - fs[i]).
/// Linear time via the monotone-argmax property (the preferred index is
/// non-decreasing in the slope).
std::vector<double> legendre_1d(const std::vector<double>& xs,
                                const std::vector<double>& fs,
                                const std::vector<double>& vs);

/// Direct O(P*D) Legendre transform for point sets in R^n (desk scale).
Eigen::VectorXd legendre_nd(const Eigen::MatrixXd& points, const Eigen::VectorXd& fs,
                            const Eigen::MatrixXd& dual_points);

}  // namespace otreg

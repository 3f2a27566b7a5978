#pragma once

#include <Eigen/Dense>
#include <vector>

#include "otreg/modulus.hpp"

namespace otreg {

/// Tabulated empirical modulus together with the radii actually realizable on
/// the grid.  Requested radii snap to the nearest whole number of cells;
/// radii without an admissible triple are skipped with a flag.
struct EmpiricalModulus {
  Modulus modulus = Modulus::zero();    // tabulated over the effective radii
  std::vector<double> requested;
  std::vector<double> effective;        // k*h actually used (0 when skipped)
  std::vector<double> values;
  std::vector<char> skipped;
  double value_at(double requested_r) const;
};

/// Lower estimate of sigma_f from exhaustive collinear grid triples:
/// max over pairs at distance k cells and interior t = j/k of
/// M_t(x0,x1)/(t(1-t)).
EmpiricalModulus empirical_smoothness(const Eigen::VectorXd& values, double x0,
                                      double h, const std::vector<double>& radii);

/// Upper estimate of rho_f (min in place of max).
EmpiricalModulus empirical_convexity(const Eigen::VectorXd& values, double x0,
                                     double h, const std::vector<double>& radii);

/// Worst (most negative when violating) value over 2D lattice triples of
///   M_t(y0,y1) - t(1-t) * bound(y1-y0),
/// used by the directional convexity tests.  values is row-major over the
/// grid (x fastest), bound takes the displacement vector.
double directional_convexity_slack_2d(
    const Eigen::MatrixXd& values, double x0, double y0, double h,
    const std::function<double(const Eigen::Vector2d&)>& bound);

}  // namespace otreg

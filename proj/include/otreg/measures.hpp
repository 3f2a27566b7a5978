#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "otreg/potentials.hpp"

namespace otreg {

struct GridSpec {
  int dim = 1;
  std::array<double, 3> lo{}, hi{};
  std::array<int, 3> npts{};
  double cell_volume() const {
    double v = 1;
    for (int a = 0; a < dim; ++a) v *= (hi[a] - lo[a]) / npts[a];
    return v;
  }
  double step(int axis) const { return (hi[axis] - lo[axis]) / npts[axis]; }
};

struct DiscreteMeasure {
  Eigen::MatrixXd points;   // N x n
  Eigen::VectorXd weights;  // sums to 1
  std::optional<GridSpec> grid;
  bool tail_flag = false;  // boundary-cell weight above 1e-10 of the max weight

  int size() const { return static_cast<int>(points.rows()); }
  int dim() const { return static_cast<int>(points.cols()); }
  void validate() const;
  Eigen::VectorXd barycenter() const { return points.transpose() * weights; }

  static DiscreteMeasure from_atoms(Eigen::MatrixXd pts, Eigen::VectorXd w);
  /// Measure dump: CSV with columns x_1..x_n, weight.
  void dump_csv(const std::string& path) const;
};

/// Midpoint-rule discretization of e^{-V} over a box (in support coordinates
/// for affine-subspace potentials, then pushed forward).  Errors out when all
/// weights underflow or when the boundary-cell mass estimate exceeds 1e-6 of
/// the interior mass.
DiscreteMeasure discretize(const PotentialSpec& spec, const Eigen::VectorXd& box_lo,
                           const Eigen::VectorXd& box_hi, int points_per_axis);

/// Default box per axis: [-(m + 8 s), m + 8 s] from the spec's rough
/// mean/scale.
DiscreteMeasure discretize_default(const PotentialSpec& spec, int points_per_axis);

/// Right-continuous piecewise-linear CDF over the cells of a 1D measure, with
/// its generalized inverse.  Cells come from the originating grid when
/// present, otherwise from midpoints between consecutive atoms.
class PiecewiseCdf {
 public:
  explicit PiecewiseCdf(const DiscreteMeasure& m);
  double cdf(double x) const;
  double quantile(double t) const;
  double cell_width() const { return max_cell_; }
  double support_lo() const { return edges_.front(); }
  double support_hi() const { return edges_.back(); }

 private:
  std::vector<double> edges_;  // N+1
  std::vector<double> cum_;    // N+1, cum_[0]=0, cum_[N]=1
  double max_cell_ = 0;
};

struct CdfQuantilePair {
  PiecewiseCdf cdf;
};

/// Spec operation wrapper; dimension != 1 throws.
PiecewiseCdf cdf_and_quantile(const DiscreteMeasure& m);

}  // namespace otreg

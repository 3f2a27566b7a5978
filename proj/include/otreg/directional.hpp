#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "otreg/modulus.hpp"

namespace otreg {

/// Even extended-real function of a displacement vector.  Evenness is
/// structural: every family evaluates through |d|-symmetric expressions, and
/// grid tables are symmetrized on evaluation.
class DirectionalModulus {
 public:
  enum class Family {
    QuadraticForm,     // 1/2 <d, Q d>, Q symmetric
    ProjectedProduct,  // kappa * |d| * |P d|
    PowerNorm,         // c * ||d||_q^p
    GridTabulated,     // values on a centered uniform n-grid
  };

  static DirectionalModulus quadratic_form(const Eigen::MatrixXd& Q);
  static DirectionalModulus projected_product(double kappa, const Eigen::MatrixXd& P);
  static DirectionalModulus power_norm(double c, double p, double q);
  /// Centered grid: axis i spans [-extent_i, extent_i] with npts_i nodes.
  static DirectionalModulus grid_tabulated(const Eigen::VectorXd& extent,
                                           const std::vector<int>& npts,
                                           std::vector<double> values);

  Family family() const { return family_; }
  const Eigen::MatrixXd& matrix() const { return Q_; }
  double param_c() const { return c_; }
  double param_p() const { return p_; }
  double param_q() const { return q_; }
  double param_kappa() const { return kappa_; }

  double operator()(const Eigen::VectorXd& d) const;

 private:
  DirectionalModulus() = default;
  Family family_ = Family::QuadraticForm;
  Eigen::MatrixXd Q_;  // quadratic form or projector
  double kappa_ = 0, c_ = 0, p_ = 2, q_ = 2;
  Eigen::VectorXd extent_;
  std::vector<int> npts_;
  std::vector<double> values_;
};

struct DirectionalBound {
  double value = 0;
  bool hit_infinity = false;
};

/// S_bar(d) = int_0^1 sup{ <p,d> : R**(p) <= S(t d) } dt.  Implemented for
/// QuadraticForm and PowerNorm constraint families R (the sublevel sets have
/// closed-form support functions); other families are rejected.
DirectionalBound directional_bound(const DirectionalModulus& S,
                                   const DirectionalModulus& R,
                                   const Eigen::VectorXd& d);

}  // namespace otreg

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "otreg/directional.hpp"
#include "otreg/modulus.hpp"

namespace otreg {

/// Support descriptor: full space, a box, or an affine subspace given by a
/// base point and an orthonormal frame (columns).
struct Support {
  enum class Kind { FullSpace, Box, AffineSubspace } kind = Kind::FullSpace;
  Eigen::VectorXd box_lo, box_hi;     // Box
  Eigen::VectorXd base;               // AffineSubspace
  Eigen::MatrixXd frame;              // n x k, orthonormal columns
  static Support full_space() { return {}; }
  static Support box(Eigen::VectorXd lo, Eigen::VectorXd hi);
  static Support affine_subspace(Eigen::VectorXd base, Eigen::MatrixXd frame);
  int intrinsic_dim(int ambient) const {
    return kind == Kind::AffineSubspace ? static_cast<int>(frame.cols()) : ambient;
  }
};

/// Potential V with density e^{-V}/Z.  Evaluators act on ambient coordinates;
/// for affine-subspace supports the value is +inf off the subspace and the
/// gradient/hessian act in frame coordinates.
struct PotentialSpec {
  std::string name;
  int dim = 1;
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;  // optional
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;   // optional
  Support support;
  std::optional<Modulus> declared_sigma;
  std::optional<Modulus> declared_rho;
  std::optional<DirectionalModulus> declared_S;
  std::optional<DirectionalModulus> declared_R;
  std::map<std::string, double> params;
  // rough location/scale used by the default box rule [-(m + 8 s), m + 8 s]
  double rough_mean = 0, rough_scale = 1;

  bool has_gradient() const { return static_cast<bool>(gradient); }
  bool has_hessian() const { return static_cast<bool>(hessian); }
};

PotentialSpec gaussian_potential(const Eigen::MatrixXd& covariance);
PotentialSpec power_norm_potential(int dim, double p, double alpha,
                                   double clarkson_c = -1.0);
PotentialSpec cauchy_potential(int dim, double sigma_table_rmax = 64.0);
PotentialSpec lipschitz_radial_potential(int dim, double L);
PotentialSpec log_lip_gaussian_potential(
    int dim, std::function<double(const Eigen::VectorXd&)> a,
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad_a, double L,
    const std::string& label = "log_lip_gaussian");
PotentialSpec subspace_gaussian_potential(const Eigen::VectorXd& base,
                                          const Eigen::MatrixXd& frame,
                                          const Eigen::MatrixXd& covariance);

/// Name-based dispatcher for the CLI.  log_lip_gaussian takes params
/// {"L":..., "a": 0 (=-L|x|) or 1 (= L sin)}.
PotentialSpec builtin(const std::string& name, const std::map<std::string, double>& params);

}  // namespace otreg

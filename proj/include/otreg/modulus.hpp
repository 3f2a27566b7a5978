#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace otreg {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// One-dimensional modulus on the non-negative axis, extended-real valued.
///
/// Parametric families vanish at r = 0 by construction.  Tabulated moduli
/// carry whatever values their table holds (monotone conjugates of moduli
/// are tabulated and are in general positive at 0).  Tabulated evaluation is
/// piecewise linear between nodes and +inf beyond the last node; the first
/// node must sit at r = 0.
class Modulus {
 public:
  enum class Family {
    Zero,                  // m(r) = 0
    Power,                 // m(r) = c * r^p,          c >= 0, p > 0
    Quadratic,             // m(r) = alpha * r^2 / 2
    QuadraticMinusLinear,  // m(r) = beta * r^2 / 2 - 2 L r,  beta > 0
    PlusInfBeyond,         // m(r) = 0 on [0, r0], +inf beyond
    Tabulated,
  };

  static Modulus zero();
  static Modulus power(double c, double p);
  static Modulus quadratic(double alpha);
  // L may be negative; L = -c/2 represents the perturbed form
  // beta r^2/2 + c r used for log-Lipschitz potentials.
  static Modulus quadratic_minus_linear(double beta, double L);
  static Modulus plus_inf_beyond(double r0);
  static Modulus tabulated(std::vector<double> grid, std::vector<double> values);

  /// Tabulates min(a r^2, b r) with an exact node at the kink a r^2 = b r.
  static Modulus min_quadratic_linear(double a, double b, double r_max,
                                      int nodes_quadratic = 1024);

  Family family() const { return family_; }
  double param_c() const { return c_; }
  double param_p() const { return p_; }
  double param_alpha() const { return alpha_; }
  double param_beta() const { return beta_; }
  double param_L() const { return L_; }
  double param_r0() const { return r0_; }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }

  /// m(r); throws std::domain_error for r < 0.  Total otherwise (may be +-inf).
  double operator()(double r) const;

  std::string describe() const;

 private:
  Modulus() = default;
  Family family_ = Family::Zero;
  double c_ = 0, p_ = 1, alpha_ = 0, beta_ = 0, L_ = 0, r0_ = 0;
  std::vector<double> grid_, values_;
};

namespace detail {
// Linear interpolation with extended-real endpoints: exact at nodes, +inf
// dominates on open intervals, -inf otherwise when an endpoint is -inf.
double lerp_ext(double x0, double v0, double x1, double v1, double x);
}  // namespace detail

}  // namespace otreg

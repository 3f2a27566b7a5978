#include "otreg/directional.hpp"

#include <cmath>
#include <stdexcept>

#include "otreg/quadrature.hpp"

namespace otreg {

DirectionalModulus DirectionalModulus::quadratic_form(const Eigen::MatrixXd& Q) {
  if (Q.rows() != Q.cols() || (Q - Q.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("DirectionalModulus: Q must be symmetric");
  DirectionalModulus m;
  m.family_ = Family::QuadraticForm;
  m.Q_ = 0.5 * (Q + Q.transpose());
  return m;
}

DirectionalModulus DirectionalModulus::projected_product(double kappa,
                                                         const Eigen::MatrixXd& P) {
  DirectionalModulus m;
  m.family_ = Family::ProjectedProduct;
  m.kappa_ = kappa;
  m.Q_ = P;
  return m;
}

DirectionalModulus DirectionalModulus::power_norm(double c, double p, double q) {
  if (c < 0 || !(p > 0) || !(q >= 1))
    throw std::invalid_argument("DirectionalModulus::power_norm: bad parameters");
  DirectionalModulus m;
  m.family_ = Family::PowerNorm;
  m.c_ = c;
  m.p_ = p;
  m.q_ = q;
  return m;
}

DirectionalModulus DirectionalModulus::grid_tabulated(const Eigen::VectorXd& extent,
                                                      const std::vector<int>& npts,
                                                      std::vector<double> values) {
  const int n = static_cast<int>(extent.size());
  if (static_cast<int>(npts.size()) != n)
    throw std::invalid_argument("grid_tabulated: dimension mismatch");
  std::size_t total = 1;
  for (int k : npts) {
    if (k < 2) throw std::invalid_argument("grid_tabulated: need >= 2 nodes per axis");
    total *= static_cast<std::size_t>(k);
  }
  if (values.size() != total)
    throw std::invalid_argument("grid_tabulated: value count mismatch");
  DirectionalModulus m;
  m.family_ = Family::GridTabulated;
  m.extent_ = extent;
  m.npts_ = npts;
  m.values_ = std::move(values);
  return m;
}

double DirectionalModulus::operator()(const Eigen::VectorXd& d) const {
  switch (family_) {
    case Family::QuadraticForm:
      return 0.5 * d.dot(Q_ * d);
    case Family::ProjectedProduct:
      return kappa_ * d.norm() * (Q_ * d).norm();
    case Family::PowerNorm: {
      double s = 0;
      for (int i = 0; i < d.size(); ++i) s += std::pow(std::abs(d[i]), q_);
      return c_ * std::pow(std::pow(s, 1.0 / q_), p_);
    }
    case Family::GridTabulated: {
      // Symmetrized multilinear interpolation: (f(d) + f(-d)) / 2.
      auto sample = [&](const Eigen::VectorXd& x) -> double {
        const int n = static_cast<int>(extent_.size());
        std::vector<int> i0(n);
        std::vector<double> fr(n);
        for (int a = 0; a < n; ++a) {
          const double h = 2.0 * extent_[a] / (npts_[a] - 1);
          double pos = (x[a] + extent_[a]) / h;
          if (pos < 0 || pos > npts_[a] - 1) return kInf;
          i0[a] = std::min(static_cast<int>(pos), npts_[a] - 2);
          fr[a] = pos - i0[a];
        }
        double acc = 0;
        const int corners = 1 << n;
        for (int c = 0; c < corners; ++c) {
          double w = 1;
          std::size_t idx = 0;
          for (int a = 0; a < n; ++a) {
            const int bit = (c >> a) & 1;
            w *= bit ? fr[a] : 1.0 - fr[a];
            idx = idx * npts_[a] + (i0[a] + bit);
          }
          acc += w * values_[idx];
        }
        return acc;
      };
      const double f1 = sample(d), f2 = sample(-d);
      if (f1 == kInf || f2 == kInf) return kInf;
      return 0.5 * (f1 + f2);
    }
  }
  return 0;
}

namespace {

// sup{ <p,d> : R(p) <= c } for the supported constraint families.
double support_of_sublevel(const DirectionalModulus& R, double c,
                           const Eigen::VectorXd& d, bool& infinite) {
  if (c < 0) return -kInf;  // empty sublevel set
  using Family = DirectionalModulus::Family;
  switch (R.family()) {
    case Family::QuadraticForm: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(R.matrix());
      const auto& lam = es.eigenvalues();
      const auto& P = es.eigenvectors();
      const Eigen::VectorXd w = P.transpose() * d;
      double quad = 0;
      const double scale = lam.cwiseAbs().maxCoeff();
      for (int k = 0; k < lam.size(); ++k) {
        if (lam[k] <= 1e-12 * std::max(scale, 1.0)) {
          if (std::abs(w[k]) > 1e-10 * std::max(1.0, d.norm())) {
            infinite = true;  // unconstrained direction
            return kInf;
          }
        } else {
          quad += w[k] * w[k] / lam[k];
        }
      }
      return std::sqrt(2.0 * c * quad);
    }
    case Family::PowerNorm: {
      if (R.param_c() <= 0) {
        infinite = true;
        return kInf;
      }
      const double radius = std::pow(c / R.param_c(), 1.0 / R.param_p());
      const double q = R.param_q();
      double dual = 0;
      if (q == 1) {
        dual = d.cwiseAbs().maxCoeff();
      } else {
        const double qs = q / (q - 1.0);
        double s = 0;
        for (int i = 0; i < d.size(); ++i) s += std::pow(std::abs(d[i]), qs);
        dual = std::pow(s, 1.0 / qs);
      }
      return dual * radius;
    }
    default:
      throw std::invalid_argument(
          "directional_bound: constraint family not supported (QuadraticForm and "
          "PowerNorm only)");
  }
}

}  // namespace

DirectionalBound directional_bound(const DirectionalModulus& S,
                                   const DirectionalModulus& R,
                                   const Eigen::VectorXd& d) {
  if (d.norm() == 0) return {0.0, false};
  bool infinite = false;
  auto integrand = [&](double t) {
    const double c = S(t * d);
    if (c == kInf) {
      infinite = true;
      return kInf;
    }
    return support_of_sublevel(R, c, d, infinite);
  };
  QuadResult q = simpson_dyadic(integrand, 0.0, 1.0, 1e-10);
  return {q.value, q.hit_infinity || infinite};
}

}  // namespace otreg

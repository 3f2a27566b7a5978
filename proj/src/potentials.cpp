#include "otreg/potentials.hpp"

#include <cmath>
#include <stdexcept>

namespace otreg {

Support Support::box(Eigen::VectorXd lo, Eigen::VectorXd hi) {
  Support s;
  s.kind = Kind::Box;
  s.box_lo = std::move(lo);
  s.box_hi = std::move(hi);
  return s;
}

Support Support::affine_subspace(Eigen::VectorXd base, Eigen::MatrixXd frame) {
  if ((frame.transpose() * frame - Eigen::MatrixXd::Identity(frame.cols(), frame.cols()))
          .cwiseAbs()
          .maxCoeff() > 1e-10)
    throw std::invalid_argument("Support: frame columns must be orthonormal");
  Support s;
  s.kind = Kind::AffineSubspace;
  s.base = std::move(base);
  s.frame = std::move(frame);
  return s;
}

PotentialSpec gaussian_potential(const Eigen::MatrixXd& covariance) {
  const int n = static_cast<int>(covariance.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(covariance);
  if (es.eigenvalues().minCoeff() <= 0)
    throw std::invalid_argument("gaussian_potential: covariance must be SPD");
  Eigen::MatrixXd prec = es.operatorInverseSqrt() * es.operatorInverseSqrt();
  PotentialSpec s;
  s.name = "gaussian";
  s.dim = n;
  s.value = [prec](const Eigen::VectorXd& x) { return 0.5 * x.dot(prec * x); };
  s.gradient = [prec](const Eigen::VectorXd& x) { return Eigen::VectorXd(prec * x); };
  s.hessian = [prec](const Eigen::VectorXd&) { return prec; };
  // Hessian is constant: quadratic moduli from the extreme eigenvalues.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ep(prec);
  s.declared_sigma = Modulus::quadratic(ep.eigenvalues().maxCoeff());
  s.declared_rho = Modulus::quadratic(ep.eigenvalues().minCoeff());
  s.declared_S = DirectionalModulus::quadratic_form(prec);
  s.declared_R = DirectionalModulus::quadratic_form(prec);
  s.rough_scale = std::sqrt(es.eigenvalues().maxCoeff());
  s.params["sigma_max_eig"] = ep.eigenvalues().maxCoeff();
  return s;
}

PotentialSpec power_norm_potential(int dim, double p, double alpha, double clarkson_c) {
  if (!(p > 1)) throw std::invalid_argument("power_norm_potential: requires p > 1");
  if (!(alpha > 0)) throw std::invalid_argument("power_norm_potential: alpha > 0");
  PotentialSpec s;
  s.name = "power_norm";
  s.dim = dim;
  s.value = [p, alpha](const Eigen::VectorXd& x) {
    double acc = 0;
    for (int i = 0; i < x.size(); ++i) acc += std::pow(std::abs(x[i]), p);
    return alpha * acc / p;
  };
  s.gradient = [p, alpha](const Eigen::VectorXd& x) {
    Eigen::VectorXd g(x.size());
    for (int i = 0; i < x.size(); ++i)
      g[i] = alpha * std::copysign(std::pow(std::abs(x[i]), p - 1.0), x[i]);
    return g;
  };
  const double pstar = p / (p - 1.0);
  if (p <= 2.0) {
    const double c = clarkson_c > 0 ? clarkson_c : std::pow(2.0, 1.0 - pstar);
    s.declared_S = DirectionalModulus::power_norm(alpha * std::pow(c, 1.0 - p) / p, p, p);
  }
  if (p >= 2.0) {
    const double c = clarkson_c > 0 ? clarkson_c : std::pow(2.0, 1.0 - p);
    s.declared_R = DirectionalModulus::power_norm(alpha * c / p, p, p);
  }
  s.params["p"] = p;
  s.params["alpha"] = alpha;
  s.rough_scale = std::pow(1.0 / alpha, 1.0 / p) * 2.0;
  return s;
}

PotentialSpec cauchy_potential(int dim, double sigma_table_rmax) {
  PotentialSpec s;
  s.name = "cauchy";
  s.dim = dim;
  const double n = dim;
  s.value = [n](const Eigen::VectorXd& x) { return n * std::log1p(x.squaredNorm()); };
  s.gradient = [n](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(2.0 * n / (1.0 + x.squaredNorm()) * x);
  };
  s.hessian = [n](const Eigen::VectorXd& x) {
    const double d = 1.0 + x.squaredNorm();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(x.size(), x.size());
    return Eigen::MatrixXd(2.0 * n / d * I - 4.0 * n / (d * d) * x * x.transpose());
  };
  s.declared_sigma = Modulus::min_quadratic_linear(6.0 * n, 4.0 * n, sigma_table_rmax);
  s.params["n"] = n;
  s.rough_scale = 4.0;  // heavy tails; boxes are chosen per experiment
  return s;
}

PotentialSpec lipschitz_radial_potential(int dim, double L) {
  if (!(L > 0)) throw std::invalid_argument("lipschitz_radial_potential: L > 0");
  PotentialSpec s;
  s.name = "lipschitz_radial";
  s.dim = dim;
  s.value = [L](const Eigen::VectorXd& x) {
    return L * std::sqrt(1.0 + x.squaredNorm());
  };
  s.gradient = [L](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(L / std::sqrt(1.0 + x.squaredNorm()) * x);
  };
  s.hessian = [L](const Eigen::VectorXd& x) {
    const double d = 1.0 + x.squaredNorm();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(x.size(), x.size());
    return Eigen::MatrixXd(L / std::sqrt(d) * I -
                           L / (d * std::sqrt(d)) * x * x.transpose());
  };
  s.declared_sigma = Modulus::power(4.0 * L, 1.0);  // sigma <= 2 r omega(r), omega <= 2L
  s.params["L"] = L;
  s.rough_scale = 1.0 / L + 1.0;
  return s;
}

PotentialSpec log_lip_gaussian_potential(
    int dim, std::function<double(const Eigen::VectorXd&)> a,
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad_a, double L,
    const std::string& label) {
  if (L < 0) throw std::invalid_argument("log_lip_gaussian_potential: L >= 0");
  PotentialSpec s;
  s.name = label;
  s.dim = dim;
  s.value = [a](const Eigen::VectorXd& x) { return 0.5 * x.squaredNorm() + a(x); };
  if (grad_a)
    s.gradient = [grad_a](const Eigen::VectorXd& x) {
      return Eigen::VectorXd(x + grad_a(x));
    };
  // Perturbation moduli: sigma(u) = u^2/2 + 2 L u, rho(u) = u^2/2 - 2 L u.
  s.declared_sigma = Modulus::quadratic_minus_linear(1.0, -L);
  s.declared_rho = Modulus::quadratic_minus_linear(1.0, L);
  s.params["L"] = L;
  s.rough_scale = 1.0 + L;
  return s;
}

PotentialSpec subspace_gaussian_potential(const Eigen::VectorXd& base,
                                          const Eigen::MatrixXd& frame,
                                          const Eigen::MatrixXd& covariance) {
  const int k = static_cast<int>(frame.cols());
  if (covariance.rows() != k)
    throw std::invalid_argument("subspace_gaussian_potential: covariance dim mismatch");
  PotentialSpec inner = gaussian_potential(covariance);
  PotentialSpec s;
  s.name = "subspace_gaussian";
  s.dim = static_cast<int>(frame.rows());
  s.support = Support::affine_subspace(base, frame);
  const Eigen::VectorXd b = base;
  const Eigen::MatrixXd F = frame;
  auto inner_value = inner.value;
  s.value = [b, F, inner_value](const Eigen::VectorXd& x) {
    const Eigen::VectorXd t = F.transpose() * (x - b);
    const Eigen::VectorXd resid = x - b - F * t;
    if (resid.norm() > 1e-9) return kInf;
    return inner_value(t);
  };
  auto inner_grad = inner.gradient;
  s.gradient = [b, F, inner_grad](const Eigen::VectorXd& x) {
    // frame-coordinate gradient pushed back to the ambient space
    const Eigen::VectorXd t = F.transpose() * (x - b);
    return Eigen::VectorXd(F * inner_grad(t));
  };
  s.declared_sigma = inner.declared_sigma;
  s.declared_rho = inner.declared_rho;
  s.rough_scale = inner.rough_scale;
  return s;
}

PotentialSpec builtin(const std::string& name,
                      const std::map<std::string, double>& params) {
  auto get = [&](const std::string& k, double dflt) {
    auto it = params.find(k);
    return it == params.end() ? dflt : it->second;
  };
  const int dim = static_cast<int>(get("dim", 1));
  if (name == "gaussian") {
    const double var = get("variance", 1.0);
    return gaussian_potential(var * Eigen::MatrixXd::Identity(dim, dim));
  }
  if (name == "power_norm")
    return power_norm_potential(dim, get("p", 2.0), get("alpha", 1.0),
                                get("clarkson_c", -1.0));
  if (name == "cauchy") return cauchy_potential(dim, get("sigma_table_rmax", 64.0));
  if (name == "lipschitz_radial") return lipschitz_radial_potential(dim, get("L", 1.0));
  if (name == "log_lip_gaussian") {
    const double L = get("L", 1.0);
    const int kind = static_cast<int>(get("a", 0.0));
    if (kind == 0) {  // a(x) = -L |x|
      return log_lip_gaussian_potential(
          dim, [L](const Eigen::VectorXd& x) { return -L * x.norm(); },
          [L](const Eigen::VectorXd& x) {
            const double n = x.norm();
            return Eigen::VectorXd(n == 0 ? Eigen::VectorXd::Zero(x.size())
                                          : Eigen::VectorXd(-L / n * x));
          },
          L, "log_lip_gaussian_neg_abs");
    }
    // a(x) = L sin(x_1)
    return log_lip_gaussian_potential(
        dim, [L](const Eigen::VectorXd& x) { return L * std::sin(x[0]); },
        [L](const Eigen::VectorXd& x) {
          Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
          g[0] = L * std::cos(x[0]);
          return g;
        },
        L, "log_lip_gaussian_sin");
  }
  throw std::invalid_argument("builtin: unknown potential '" + name + "'");
}

}  // namespace otreg

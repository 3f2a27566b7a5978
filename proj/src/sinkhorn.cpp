#include "otreg/sinkhorn.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "otreg/modulus.hpp"

namespace otreg {

namespace {

Eigen::VectorXd safe_log(const Eigen::VectorXd& w) {
  Eigen::VectorXd lw(w.size());
  for (int i = 0; i < w.size(); ++i) lw[i] = w[i] > 0 ? std::log(w[i]) : -kInf;
  return lw;
}

// phi_i = eps * LSE_j( (K(i,j) - psi_j)/eps + logb_j ), streamed over columns
// so the column-major kernel is read contiguously in both passes.
void lse_rows(const Eigen::MatrixXd& K, const Eigen::VectorXd& psi,
              const Eigen::VectorXd& logb, double eps, Eigen::VectorXd& out) {
  const int N = static_cast<int>(K.rows());
  const int M = static_cast<int>(K.cols());
  Eigen::VectorXd rowmax = Eigen::VectorXd::Constant(N, -kInf);
  for (int j = 0; j < M; ++j) {
    if (logb[j] == -kInf) continue;
    const double shift = -psi[j] + eps * logb[j];
    for (int i = 0; i < N; ++i)
      rowmax[i] = std::max(rowmax[i], K(i, j) + shift);
  }
  Eigen::VectorXd rowsum = Eigen::VectorXd::Zero(N);
  for (int j = 0; j < M; ++j) {
    if (logb[j] == -kInf) continue;
    const double shift = -psi[j] + eps * logb[j];
    for (int i = 0; i < N; ++i)
      rowsum[i] += std::exp((K(i, j) + shift - rowmax[i]) / eps);
  }
  for (int i = 0; i < N; ++i) out[i] = rowmax[i] + eps * std::log(rowsum[i]);
}

void lse_cols(const Eigen::MatrixXd& K, const Eigen::VectorXd& phi,
              const Eigen::VectorXd& loga, double eps, Eigen::VectorXd& out) {
  const int N = static_cast<int>(K.rows());
  const int M = static_cast<int>(K.cols());
  for (int j = 0; j < M; ++j) {
    double mx = -kInf;
    for (int i = 0; i < N; ++i) {
      if (loga[i] == -kInf) continue;
      mx = std::max(mx, K(i, j) - phi[i] + eps * loga[i]);
    }
    double s = 0;
    for (int i = 0; i < N; ++i) {
      if (loga[i] == -kInf) continue;
      s += std::exp((K(i, j) - phi[i] + eps * loga[i] - mx) / eps);
    }
    out[j] = mx + eps * std::log(s);
  }
}

}  // namespace

EntropicValue entropic_legendre(const Eigen::VectorXd& psi_values,
                                const DiscreteMeasure& measure, double eps,
                                const Eigen::VectorXd& x) {
  if (!(eps > 0)) throw std::invalid_argument("entropic_legendre: eps must be > 0");
  if (psi_values.size() != measure.size())
    throw std::invalid_argument("entropic_legendre: psi size mismatch");
  double mx = -kInf;
  for (int j = 0; j < measure.size(); ++j) {
    if (measure.weights[j] <= 0 || psi_values[j] == kInf) continue;
    const double t = (measure.points.row(j).dot(x) - psi_values[j]) / eps +
                     std::log(measure.weights[j]);
    mx = std::max(mx, t);
  }
  if (mx == -kInf) return {-kInf, true};
  double s = 0;
  for (int j = 0; j < measure.size(); ++j) {
    if (measure.weights[j] <= 0 || psi_values[j] == kInf) continue;
    const double t = (measure.points.row(j).dot(x) - psi_values[j]) / eps +
                     std::log(measure.weights[j]);
    s += std::exp(t - mx);
  }
  return {eps * (mx + std::log(s)), false};
}

EntropicSolution sinkhorn(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                          double eps, double tol, long max_sweeps) {
  if (!(eps > 0)) throw std::invalid_argument("sinkhorn: eps must be > 0");
  if (tol <= 0) tol = 1e-9 * eps;
  mu.validate();
  nu.validate();
  const int N = mu.size(), M = nu.size();
  Eigen::MatrixXd K = mu.points * nu.points.transpose();
  const Eigen::VectorXd loga = safe_log(mu.weights);
  const Eigen::VectorXd logb = safe_log(nu.weights);

  EntropicSolution sol;
  sol.mu = mu;
  sol.nu = nu;
  sol.epsilon = eps;
  sol.tolerance = tol;
  sol.phi = Eigen::VectorXd::Zero(N);
  sol.psi = Eigen::VectorXd::Zero(M);

  Eigen::VectorXd phi_prev(N);
  double delta = std::numeric_limits<double>::max();
  long sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    phi_prev = sol.phi;
    lse_rows(K, sol.psi, logb, eps, sol.phi);
    lse_cols(K, sol.phi, loga, eps, sol.psi);
    delta = (sol.phi - phi_prev).cwiseAbs().maxCoeff();
    if (sweep > 0 && delta <= tol) {
      ++sweep;
      break;
    }
  }
  sol.iterations = sweep;
  sol.final_residual = delta;
  sol.converged = delta <= tol;

  // Gauge: anchor phi at the grid point nearest the mu-barycenter.
  const Eigen::VectorXd bary = mu.barycenter();
  int anchor = 0;
  double best = std::numeric_limits<double>::max();
  for (int i = 0; i < N; ++i) {
    const double d = (mu.points.row(i).transpose() - bary).norm();
    if (d < best) {
      best = d;
      anchor = i;
    }
  }
  const double shift = sol.phi[anchor];
  sol.phi.array() -= shift;
  sol.psi.array() += shift;
  return sol;
}

Eigen::MatrixXd plan(const EntropicSolution& sol) {
  const int N = sol.mu.size(), M = sol.nu.size();
  Eigen::MatrixXd P(N, M);
  const Eigen::VectorXd loga = safe_log(sol.mu.weights);
  const Eigen::VectorXd logb = safe_log(sol.nu.weights);
  for (int j = 0; j < M; ++j) {
    const Eigen::VectorXd yj = sol.nu.points.row(j);
    for (int i = 0; i < N; ++i) {
      if (loga[i] == -kInf || logb[j] == -kInf) {
        P(i, j) = 0.0;
        continue;
      }
      const double lp = (sol.mu.points.row(i).dot(yj) - sol.phi[i] - sol.psi[j]) /
                            sol.epsilon +
                        loga[i] + logb[j];
      P(i, j) = std::exp(lp);
    }
  }
  return P;
}

double sinkhorn_residual(const EntropicSolution& sol) {
  double worst = 0;
  for (int i = 0; i < sol.mu.size(); ++i) {
    const Eigen::VectorXd x = sol.mu.points.row(i);
    const EntropicValue v = entropic_legendre(sol.psi, sol.nu, sol.epsilon, x);
    worst = std::max(worst, std::abs(sol.phi[i] - v.value));
  }
  return worst;
}

Eigen::MatrixXd barycentric_map(const EntropicSolution& sol) {
  const int N = sol.mu.size(), M = sol.nu.size();
  const int n = sol.nu.dim();
  Eigen::MatrixXd T(N, n);
  const Eigen::VectorXd logb = safe_log(sol.nu.weights);
  for (int i = 0; i < N; ++i) {
    // conditional mean through a row softmax (equals sum_y y pi / mu at the
    // fixed point and stays normalized mid-iteration)
    double mx = -kInf;
    for (int j = 0; j < M; ++j) {
      if (logb[j] == -kInf) continue;
      mx = std::max(mx, (sol.mu.points.row(i).dot(sol.nu.points.row(j)) -
                         sol.psi[j]) / sol.epsilon + logb[j]);
    }
    double denom = 0;
    Eigen::VectorXd num = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < M; ++j) {
      if (logb[j] == -kInf) continue;
      const double t = (sol.mu.points.row(i).dot(sol.nu.points.row(j)) -
                        sol.psi[j]) / sol.epsilon + logb[j];
      const double w = std::exp(t - mx);
      denom += w;
      num += w * sol.nu.points.row(j).transpose();
    }
    T.row(i) = (num / denom).transpose();
  }
  return T;
}

double entropic_cost(const EntropicSolution& sol) {
  // pi log(pi/(a b)) = pi (<x,y> - phi - psi)/eps, so the objective collapses
  // to sum pi (|x|^2/2 + |y|^2/2 - phi - psi).
  const int N = sol.mu.size(), M = sol.nu.size();
  const Eigen::VectorXd loga = safe_log(sol.mu.weights);
  const Eigen::VectorXd logb = safe_log(sol.nu.weights);
  double acc = 0;
  for (int j = 0; j < M; ++j) {
    if (logb[j] == -kInf) continue;
    const Eigen::VectorXd yj = sol.nu.points.row(j);
    const double hy = 0.5 * yj.squaredNorm();
    for (int i = 0; i < N; ++i) {
      if (loga[i] == -kInf) continue;
      const double lp = (sol.mu.points.row(i).dot(yj) - sol.phi[i] - sol.psi[j]) /
                            sol.epsilon +
                        loga[i] + logb[j];
      const double p = std::exp(lp);
      if (p == 0) continue;
      acc += p * (0.5 * sol.mu.points.row(i).squaredNorm() + hy - sol.phi[i] -
                  sol.psi[j]);
    }
  }
  return acc;
}

void dump_solution_json(const EntropicSolution& sol, const std::string& path) {
  std::ofstream out(path);
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << "{\n  \"epsilon\": " << num(sol.epsilon) << ",\n  \"grid\": [";
  for (int i = 0; i < sol.mu.size(); ++i) {
    if (i) out << ",";
    out << "[";
    for (int a = 0; a < sol.mu.dim(); ++a) {
      if (a) out << ",";
      out << num(sol.mu.points(i, a));
    }
    out << "]";
  }
  out << "],\n  \"phi\": [";
  for (int i = 0; i < sol.phi.size(); ++i) out << (i ? "," : "") << num(sol.phi[i]);
  out << "],\n  \"psi\": [";
  for (int j = 0; j < sol.psi.size(); ++j) out << (j ? "," : "") << num(sol.psi[j]);
  out << "],\n  \"residual\": " << num(sol.final_residual)
      << ",\n  \"iterations\": " << sol.iterations
      << ",\n  \"converged\": " << (sol.converged ? "true" : "false") << "\n}\n";
}

}  // namespace otreg

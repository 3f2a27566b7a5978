#include "otreg/aniso.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace otreg {

double characteristic_root(double a, double eps) {
  if (!(a > 0) || !(eps > 0))
    throw std::invalid_argument("characteristic_root: a, eps must be > 0");
  const double b = 2.0 + a * eps * eps;
  const double s = 0.5 * (b + std::sqrt(b * b - 4.0));
  return 1.0 / s;
}

namespace {

struct AnisoSpectral {
  Eigen::MatrixXd Bh;   // B^{1/2}
  Eigen::MatrixXd P;    // eigenvectors of M
  Eigen::VectorXd a;    // eigenvalues of M
};

AnisoSpectral decompose(const SpdMatrix& A, const SpdMatrix& B) {
  AnisoSpectral d;
  d.Bh = B.power(0.5);
  const Eigen::MatrixXd M = B.power(-0.5) * A.power(-1.0) * B.power(-0.5);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (M + M.transpose()));
  d.P = es.eigenvectors();
  d.a = es.eigenvalues();
  return d;
}

}  // namespace

Eigen::MatrixXd aniso_S_eps_hessian(const SpdMatrix& A, const SpdMatrix& B,
                                    double eps) {
  const AnisoSpectral d = decompose(A, B);
  Eigen::VectorXd coef(d.a.size());
  for (int k = 0; k < d.a.size(); ++k) {
    const double r = characteristic_root(d.a[k], eps);
    const double denom = 1.0 - r * r;
    coef[k] = eps * d.a[k] * r * r / denom + (1.0 - r) * (1.0 - r) / (eps * denom);
  }
  return d.Bh * d.P * coef.asDiagonal() * d.P.transpose() * d.Bh;
}

Eigen::MatrixXd aniso_S_limit_hessian(const SpdMatrix& A, const SpdMatrix& B) {
  const AnisoSpectral d = decompose(A, B);
  Eigen::VectorXd coef = d.a.cwiseSqrt();
  return d.Bh * d.P * coef.asDiagonal() * d.P.transpose() * d.Bh;
}

double aniso_S_eps_closed(const SpdMatrix& A, const SpdMatrix& B, double eps,
                          const Eigen::VectorXd& d) {
  if (!(eps > 0)) throw std::invalid_argument("aniso_S_eps_closed: eps must be > 0");
  const AnisoSpectral sp = decompose(A, B);
  const Eigen::VectorXd w0 = sp.P.transpose() * (sp.Bh * d);
  double acc = 0;
  for (int k = 0; k < sp.a.size(); ++k) {
    const double r = characteristic_root(sp.a[k], eps);
    const double denom = 1.0 - r * r;
    acc += (eps * sp.a[k] * r * r / denom +
            (1.0 - r) * (1.0 - r) / (eps * denom)) *
           w0[k] * w0[k];
  }
  return 0.5 * acc;
}

double aniso_S_eps_truncated(const SpdMatrix& A, const SpdMatrix& B, double eps,
                             const Eigen::VectorXd& d, int N) {
  if (N < 10) throw std::invalid_argument("aniso_S_eps_truncated: N >= 10 required");
  const int n = A.dim();
  const Eigen::MatrixXd Ainv = A.power(-1.0);
  const Eigen::MatrixXd& Bm = B.matrix();
  // First-order system for u_1..u_{N-1}:
  //   (eps A^{-1} + 2/eps B) u_i - 1/eps B (u_{i-1} + u_{i+1}) = 0,
  // block tridiagonal with constant blocks; Thomas elimination.
  const Eigen::MatrixXd D = eps * Ainv + (2.0 / eps) * Bm;
  const Eigen::MatrixXd O = (1.0 / eps) * Bm;  // off-diagonal magnitude

  const int m = N - 1;
  std::vector<Eigen::MatrixXd> cprime(m);
  std::vector<Eigen::VectorXd> dprime(m);
  Eigen::MatrixXd denom = D;
  Eigen::VectorXd rhs0 = O * d;  // from u_0 = d
  cprime[0] = denom.ldlt().solve(O);
  dprime[0] = denom.ldlt().solve(rhs0);
  for (int i = 1; i < m; ++i) {
    denom = D - O * cprime[i - 1];
    const Eigen::VectorXd r = O * dprime[i - 1];  // u_N = 0 contributes nothing
    auto ldlt = denom.ldlt();
    cprime[i] = ldlt.solve(O);
    dprime[i] = ldlt.solve(r);
  }
  std::vector<Eigen::VectorXd> u(static_cast<std::size_t>(N) + 1,
                                 Eigen::VectorXd::Zero(n));
  u[0] = d;
  u[N] = Eigen::VectorXd::Zero(n);
  u[m] = dprime[m - 1];
  for (int i = m - 1; i >= 1; --i) u[i] = dprime[i - 1] + cprime[i - 1] * u[i + 1];

  double value = 0;
  for (int i = 1; i <= N; ++i) value += eps * 0.5 * u[i].dot(Ainv * u[i]);
  for (int i = 0; i < N; ++i) {
    const Eigen::VectorXd diff = u[i] - u[i + 1];
    value += 0.5 / eps * diff.dot(Bm * diff);
  }
  return value;
}

}  // namespace otreg

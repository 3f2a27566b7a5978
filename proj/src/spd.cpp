#include "otreg/spd.hpp"

#include <cmath>
#include <stdexcept>

namespace otreg {

SpdMatrix::SpdMatrix(const Eigen::MatrixXd& m) : m_(m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SpdMatrix: not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("SpdMatrix: not symmetric");
  m_ = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m_);
  P_ = es.eigenvectors();
  lambda_ = es.eigenvalues();
  if (lambda_.minCoeff() <= 0)
    throw std::invalid_argument("SpdMatrix: not positive definite");
  const Eigen::MatrixXd recon = P_ * lambda_.asDiagonal() * P_.transpose();
  if ((recon - m_).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::runtime_error("SpdMatrix: spectral reconstruction failed");
}

Eigen::MatrixXd SpdMatrix::power(double p) const {
  Eigen::VectorXd lp(lambda_.size());
  for (int i = 0; i < lambda_.size(); ++i) lp[i] = std::pow(lambda_[i], p);
  return P_ * lp.asDiagonal() * P_.transpose();
}

SpdMatrix spd_sqrt(const SpdMatrix& m) { return m.sqrt(); }

Eigen::MatrixXd gaussian_map(const SpdMatrix& A, const SpdMatrix& B) {
  const Eigen::MatrixXd Bh = B.power(0.5);
  const Eigen::MatrixXd Bmh = B.power(-0.5);
  const Eigen::MatrixXd Ainv = A.power(-1.0);
  const Eigen::MatrixXd M = Bmh * Ainv * Bmh;
  const Eigen::MatrixXd T1 = Bh * SpdMatrix(M).power(0.5) * Bh;

  const Eigen::MatrixXd Ah = A.power(0.5);
  const Eigen::MatrixXd Amh = A.power(-0.5);
  const Eigen::MatrixXd T2 = Amh * SpdMatrix(Ah * B.matrix() * Ah).power(0.5) * Amh;

  if ((T1 - T2).norm() > 1e-11)
    throw std::runtime_error("gaussian_map: the two closed forms disagree");
  if ((T1 * A.matrix() * T1 - B.matrix()).norm() > 1e-10)
    throw std::runtime_error("gaussian_map: Riccati residual too large");
  return T1;
}

}  // namespace otreg

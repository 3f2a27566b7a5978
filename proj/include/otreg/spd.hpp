#pragma once

#include <Eigen/Dense>

namespace otreg {

/// Symmetric positive-definite matrix with a cached spectral decomposition.
class SpdMatrix {
 public:
  explicit SpdMatrix(const Eigen::MatrixXd& m);

  const Eigen::MatrixXd& matrix() const { return m_; }
  const Eigen::MatrixXd& eigenvectors() const { return P_; }
  const Eigen::VectorXd& eigenvalues() const { return lambda_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  /// P diag(lambda^p) P^T for any real exponent.
  Eigen::MatrixXd power(double p) const;
  SpdMatrix sqrt() const { return SpdMatrix(power(0.5)); }

 private:
  Eigen::MatrixXd m_, P_;
  Eigen::VectorXd lambda_;
};

SpdMatrix spd_sqrt(const SpdMatrix& m);

/// Linear optimal map between N(0,A) and N(0,B):
///   T = B^{1/2} (B^{-1/2} A^{-1} B^{-1/2})^{1/2} B^{1/2}
///     = A^{-1/2} (A^{1/2} B A^{1/2})^{1/2} A^{-1/2}.
/// Asserts the two forms agree to 1e-11 Frobenius and that T A T = B to
/// 1e-10; a violation throws std::runtime_error (numeric breakdown).
Eigen::MatrixXd gaussian_map(const SpdMatrix& A, const SpdMatrix& B);

}  // namespace otreg

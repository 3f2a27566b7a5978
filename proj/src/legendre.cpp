#include "otreg/legendre.hpp"

#include <algorithm>
#include <stdexcept>

namespace otreg {

std::vector<double> legendre_1d(const std::vector<double>& xs,
                                const std::vector<double>& fs,
                                const std::vector<double>& vs) {
  if (xs.size() != fs.size() || xs.empty())
    throw std::invalid_argument("legendre_1d: size mismatch");
  if (!std::is_sorted(xs.begin(), xs.end()) || !std::is_sorted(vs.begin(), vs.end()))
    throw std::invalid_argument("legendre_1d: grids must be sorted");
  // f* equals the conjugate of the lower convex hull of the samples; on the
  // hull the score v*x - f is unimodal in the node index, so a single
  // monotone pointer sweep computes all conjugate values (linear time).
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2], b = hull.back();
      const double cross =
          (fs[b] - fs[a]) * (xs[i] - xs[a]) - (fs[i] - fs[a]) * (xs[b] - xs[a]);
      if (cross >= 0) break;
      hull.pop_back();
    }
    hull.push_back(i);
  }
  std::vector<double> out(vs.size());
  std::size_t k = 0;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    auto score = [&](std::size_t h) { return vs[j] * xs[hull[h]] - fs[hull[h]]; };
    while (k + 1 < hull.size() && score(k + 1) >= score(k)) ++k;
    out[j] = score(k);
  }
  return out;
}

Eigen::VectorXd legendre_nd(const Eigen::MatrixXd& points, const Eigen::VectorXd& fs,
                            const Eigen::MatrixXd& dual_points) {
  if (points.rows() != fs.size())
    throw std::invalid_argument("legendre_nd: size mismatch");
  Eigen::MatrixXd scores = points * dual_points.transpose();  // P x D
  scores.colwise() -= fs;
  return scores.colwise().maxCoeff();
}

}  // namespace otreg

#include "otreg/measures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace otreg {

void DiscreteMeasure::validate() const {
  if (points.rows() != weights.size())
    throw std::invalid_argument("DiscreteMeasure: size mismatch");
  if (weights.minCoeff() < 0)
    throw std::invalid_argument("DiscreteMeasure: negative weight");
  if (std::abs(weights.sum() - 1.0) > 1e-12)
    throw std::invalid_argument("DiscreteMeasure: weights must sum to 1");
}

DiscreteMeasure DiscreteMeasure::from_atoms(Eigen::MatrixXd pts, Eigen::VectorXd w) {
  DiscreteMeasure m;
  m.points = std::move(pts);
  m.weights = std::move(w);
  m.weights /= m.weights.sum();
  m.validate();
  return m;
}

void DiscreteMeasure::dump_csv(const std::string& path) const {
  std::ofstream out(path);
  for (int a = 0; a < dim(); ++a) out << "x_" << (a + 1) << ",";
  out << "weight\n";
  char buf[64];
  for (int i = 0; i < size(); ++i) {
    for (int a = 0; a < dim(); ++a) {
      std::snprintf(buf, sizeof buf, "%.17g,", points(i, a));
      out << buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g\n", weights[i]);
    out << buf;
  }
}

DiscreteMeasure discretize(const PotentialSpec& spec, const Eigen::VectorXd& box_lo,
                           const Eigen::VectorXd& box_hi, int points_per_axis) {
  const int k = spec.support.intrinsic_dim(spec.dim);
  if (box_lo.size() != k || box_hi.size() != k)
    throw std::invalid_argument("discretize: box dimension mismatch");
  if (k > 3) throw std::invalid_argument("discretize: desk scale is n <= 3");
  const int N = points_per_axis;

  GridSpec gs;
  gs.dim = k;
  std::array<double, 3> h{};
  long total = 1;
  for (int a = 0; a < k; ++a) {
    gs.lo[a] = box_lo[a];
    gs.hi[a] = box_hi[a];
    gs.npts[a] = N;
    h[a] = (box_hi[a] - box_lo[a]) / N;
    total *= N;
  }

  const bool on_subspace = spec.support.kind == Support::Kind::AffineSubspace;
  Eigen::MatrixXd pts(total, spec.dim);
  Eigen::VectorXd logw(total);
  std::vector<char> boundary(total, 0);
  Eigen::VectorXd t(k);
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    bool is_boundary = false;
    for (int a = k - 1; a >= 0; --a) {
      const int ia = static_cast<int>(rem % N);
      rem /= N;
      t[a] = box_lo[a] + (ia + 0.5) * h[a];
      if (ia == 0 || ia == N - 1) is_boundary = true;
    }
    boundary[idx] = is_boundary;
    Eigen::VectorXd x =
        on_subspace ? Eigen::VectorXd(spec.support.base + spec.support.frame * t) : t;
    pts.row(idx) = x.transpose();
    logw[idx] = -spec.value(on_subspace ? x : t);
  }
  const double shift = logw.maxCoeff();
  if (!std::isfinite(shift))
    throw std::runtime_error("discretize: potential not finite on the box");
  Eigen::VectorXd w = (logw.array() - shift).exp();
  const double total_mass = w.sum();
  if (!(total_mass > 0))
    throw std::runtime_error(
        "discretize: all weights underflow; enlarge the box or rescale the potential");

  double boundary_mass = 0, max_boundary = 0;
  for (long i = 0; i < total; ++i)
    if (boundary[i]) {
      boundary_mass += w[i];
      max_boundary = std::max(max_boundary, w[i]);
    }
  const double interior_mass = total_mass - boundary_mass;
  if (!(boundary_mass < 1e-6 * interior_mass))
    throw std::runtime_error(
        "discretize: boundary-cell mass exceeds 1e-6 of interior mass; the box "
        "truncates too much of the measure");

  DiscreteMeasure m;
  m.points = std::move(pts);
  m.weights = w / total_mass;
  m.grid = gs;
  m.tail_flag = max_boundary > 1e-10 * w.maxCoeff();
  return m;
}

DiscreteMeasure discretize_default(const PotentialSpec& spec, int points_per_axis) {
  const int k = spec.support.intrinsic_dim(spec.dim);
  const double half = std::abs(spec.rough_mean) + 8.0 * spec.rough_scale;
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(k, -half);
  Eigen::VectorXd hi = Eigen::VectorXd::Constant(k, half);
  return discretize(spec, lo, hi, points_per_axis);
}

PiecewiseCdf::PiecewiseCdf(const DiscreteMeasure& m) {
  if (m.dim() != 1) throw std::invalid_argument("PiecewiseCdf: dimension must be 1");
  const int n = m.size();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return m.points(a, 0) < m.points(b, 0); });
  std::vector<double> xs(n), ws(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = m.points(order[i], 0);
    ws[i] = m.weights[order[i]];
  }
  edges_.resize(n + 1);
  if (m.grid && m.grid->dim == 1) {
    const double h = m.grid->step(0);
    for (int i = 0; i < n; ++i) edges_[i] = xs[i] - 0.5 * h;
    edges_[n] = xs[n - 1] + 0.5 * h;
  } else {
    for (int i = 1; i < n; ++i) edges_[i] = 0.5 * (xs[i - 1] + xs[i]);
    const double h0 = n > 1 ? xs[1] - xs[0] : 1.0;
    const double h1 = n > 1 ? xs[n - 1] - xs[n - 2] : 1.0;
    edges_[0] = xs[0] - 0.5 * h0;
    edges_[n] = xs[n - 1] + 0.5 * h1;
  }
  cum_.assign(n + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    cum_[i + 1] = cum_[i] + ws[i];
    max_cell_ = std::max(max_cell_, edges_[i + 1] - edges_[i]);
  }
  cum_[n] = 1.0;  // exact top end
}

double PiecewiseCdf::cdf(double x) const {
  if (x <= edges_.front()) return 0.0;
  if (x >= edges_.back()) return 1.0;
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - edges_.begin()) - 1;
  const double frac = (x - edges_[i]) / (edges_[i + 1] - edges_[i]);
  return cum_[i] + frac * (cum_[i + 1] - cum_[i]);
}

double PiecewiseCdf::quantile(double t) const {
  if (t <= 0.0) return edges_.front();
  if (t >= 1.0) return edges_.back();
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - cum_.begin());
  i = i == 0 ? 0 : i - 1;
  while (i + 1 < cum_.size() && cum_[i + 1] == cum_[i]) ++i;  // skip empty cells
  if (i + 1 >= cum_.size()) return edges_.back();
  const double frac = (t - cum_[i]) / (cum_[i + 1] - cum_[i]);
  return edges_[i] + frac * (edges_[i + 1] - edges_[i]);
}

PiecewiseCdf cdf_and_quantile(const DiscreteMeasure& m) { return PiecewiseCdf(m); }

}  // namespace otreg

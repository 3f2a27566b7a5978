#include "otreg/modulus.hpp"

#include <algorithm>
#include <sstream>

namespace otreg {

namespace detail {

double lerp_ext(double x0, double v0, double x1, double v1, double x) {
  if (x == x0) return v0;
  if (x == x1) return v1;
  if (std::isinf(v0) || std::isinf(v1)) {
    if (v0 == kInf || v1 == kInf) return kInf;
    return -kInf;
  }
  const double t = (x - x0) / (x1 - x0);
  return (1.0 - t) * v0 + t * v1;
}

}  // namespace detail

Modulus Modulus::zero() { return Modulus{}; }

Modulus Modulus::power(double c, double p) {
  if (c < 0) throw std::invalid_argument("Modulus::power: c must be >= 0");
  if (!(p > 0)) throw std::invalid_argument("Modulus::power: p must be > 0");
  Modulus m;
  m.family_ = Family::Power;
  m.c_ = c;
  m.p_ = p;
  return m;
}

Modulus Modulus::quadratic(double alpha) {
  Modulus m;
  m.family_ = Family::Quadratic;
  m.alpha_ = alpha;
  return m;
}

Modulus Modulus::quadratic_minus_linear(double beta, double L) {
  if (!(beta > 0))
    throw std::invalid_argument("Modulus::quadratic_minus_linear: beta must be > 0");
  Modulus m;
  m.family_ = Family::QuadraticMinusLinear;
  m.beta_ = beta;
  m.L_ = L;
  return m;
}

Modulus Modulus::plus_inf_beyond(double r0) {
  if (r0 < 0) throw std::invalid_argument("Modulus::plus_inf_beyond: r0 must be >= 0");
  Modulus m;
  m.family_ = Family::PlusInfBeyond;
  m.r0_ = r0;
  return m;
}

Modulus Modulus::tabulated(std::vector<double> grid, std::vector<double> values) {
  if (grid.size() != values.size() || grid.empty())
    throw std::invalid_argument("Modulus::tabulated: grid/value size mismatch");
  if (grid.front() != 0.0)
    throw std::invalid_argument("Modulus::tabulated: grid must start at 0");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1]))
      throw std::invalid_argument("Modulus::tabulated: grid must be strictly increasing");
  for (double v : values)
    if (std::isnan(v)) throw std::invalid_argument("Modulus::tabulated: NaN value");
  Modulus m;
  m.family_ = Family::Tabulated;
  m.grid_ = std::move(grid);
  m.values_ = std::move(values);
  return m;
}

Modulus Modulus::min_quadratic_linear(double a, double b, double r_max,
                                      int nodes_quadratic) {
  if (!(a > 0) || !(b > 0) || !(r_max > 0))
    throw std::invalid_argument("min_quadratic_linear: parameters must be positive");
  const double kink = b / a;  // a r^2 == b r
  std::vector<double> g, v;
  const double q_end = std::min(kink, r_max);
  for (int i = 0; i <= nodes_quadratic; ++i) {
    const double r = q_end * i / nodes_quadratic;
    g.push_back(r);
    v.push_back(std::min(a * r * r, b * r));
  }
  if (r_max > kink) {
    g.push_back(r_max);
    v.push_back(b * r_max);  // linear branch, interpolation exact
  }
  return tabulated(std::move(g), std::move(v));
}

double Modulus::operator()(double r) const {
  if (r < 0) throw std::domain_error("Modulus eval: r must be >= 0");
  switch (family_) {
    case Family::Zero:
      return 0.0;
    case Family::Power:
      return c_ * std::pow(r, p_);
    case Family::Quadratic:
      return alpha_ * r * r / 2.0;
    case Family::QuadraticMinusLinear:
      return beta_ * r * r / 2.0 - 2.0 * L_ * r;
    case Family::PlusInfBeyond:
      return r <= r0_ ? 0.0 : kInf;
    case Family::Tabulated: {
      if (r > grid_.back()) return kInf;
      auto it = std::upper_bound(grid_.begin(), grid_.end(), r);
      if (it == grid_.begin()) return values_.front();
      const std::size_t hi = static_cast<std::size_t>(it - grid_.begin());
      if (hi == grid_.size()) return values_.back();
      return detail::lerp_ext(grid_[hi - 1], values_[hi - 1], grid_[hi], values_[hi], r);
    }
  }
  return 0.0;
}

std::string Modulus::describe() const {
  std::ostringstream os;
  switch (family_) {
    case Family::Zero: os << "Zero"; break;
    case Family::Power: os << "Power(c=" << c_ << ",p=" << p_ << ")"; break;
    case Family::Quadratic: os << "Quadratic(alpha=" << alpha_ << ")"; break;
    case Family::QuadraticMinusLinear:
      os << "QuadraticMinusLinear(beta=" << beta_ << ",L=" << L_ << ")";
      break;
    case Family::PlusInfBeyond: os << "PlusInfBeyond(r0=" << r0_ << ")"; break;
    case Family::Tabulated: os << "Tabulated(" << grid_.size() << " nodes)"; break;
  }
  return os.str();
}

}  // namespace otreg

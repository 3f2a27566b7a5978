#include "otreg/conjugacy.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "otreg/quadrature.hpp"

namespace otreg {

namespace {

using Family = Modulus::Family;

double conjugate_tabulated(const Modulus& m, double v) {
  // sup over table nodes; exact for the piecewise-linear extension.
  const auto& g = m.grid();
  const auto& val = m.values();
  double best = -kInf;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (val[i] == kInf) continue;
    if (val[i] == -kInf) return kInf;
    best = std::max(best, g[i] * v - val[i]);
  }
  return best;
}

// Lower convex envelope of the finite nodes of a tabulated modulus
// (monotone-chain hull on the graph), returned as node lists.
void convex_envelope(const Modulus& m, std::vector<double>& hx, std::vector<double>& hv) {
  const auto& g = m.grid();
  const auto& val = m.values();
  hx.clear();
  hv.clear();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (val[i] == kInf) continue;  // excluded from the effective domain
    double x = g[i], y = val[i];
    while (hx.size() >= 2) {
      const std::size_t k = hx.size();
      const double cross = (hv[k - 1] - hv[k - 2]) * (x - hx[k - 2]) -
                           (y - hv[k - 2]) * (hx[k - 1] - hx[k - 2]);
      if (cross >= 0)
        break;
      hx.pop_back();
      hv.pop_back();
    }
    hx.push_back(x);
    hv.push_back(y);
  }
}

double eval_envelope(const std::vector<double>& hx, const std::vector<double>& hv,
                     double u) {
  if (hx.empty()) return -kInf;  // conjugate of m == +inf everywhere
  if (u < hx.front() || u > hx.back()) return kInf;
  auto it = std::upper_bound(hx.begin(), hx.end(), u);
  if (it == hx.begin()) return hv.front();
  const std::size_t hi = static_cast<std::size_t>(it - hx.begin());
  if (hi == hx.size()) return hv.back();
  return detail::lerp_ext(hx[hi - 1], hv[hi - 1], hx[hi], hv[hi], u);
}

bool is_nondecreasing(const Modulus& m) {
  switch (m.family()) {
    case Family::Zero:
    case Family::PlusInfBeyond:
    case Family::Power:
      return true;
    case Family::Quadratic:
      return m.param_alpha() >= 0;
    case Family::QuadraticMinusLinear:
      return m.param_L() <= 0;
    case Family::Tabulated: {
      const auto& v = m.values();
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] == kInf && v[i + 1] < kInf) return false;
        if (v[i] > v[i + 1] + 1e-12 * std::max(1.0, std::abs(v[i]))) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

double conjugate_value(const Modulus& m, double v) {
  if (v < 0) throw std::domain_error("conjugate_value: v must be >= 0");
  switch (m.family()) {
    case Family::Zero:
      return v > 0 ? kInf : 0.0;
    case Family::Power: {
      const double c = m.param_c(), p = m.param_p();
      if (c == 0) return v > 0 ? kInf : 0.0;
      if (p > 1) {
        if (v == 0) return 0.0;
        const double q = p / (p - 1.0);
        return (p - 1.0) / p * std::pow(c * p, -1.0 / (p - 1.0)) * std::pow(v, q);
      }
      if (p == 1) return v <= c ? 0.0 : kInf;
      return v > 0 ? kInf : 0.0;  // p < 1: sublinear, unbounded slope ratio
    }
    case Family::Quadratic: {
      const double a = m.param_alpha();
      if (a > 0) return v * v / (2.0 * a);
      if (a == 0) return v > 0 ? kInf : 0.0;
      return kInf;
    }
    case Family::QuadraticMinusLinear: {
      const double s = v + 2.0 * m.param_L();
      return s > 0 ? s * s / (2.0 * m.param_beta()) : 0.0;
    }
    case Family::PlusInfBeyond:
      return m.param_r0() * v;
    case Family::Tabulated:
      return conjugate_tabulated(m, v);
  }
  return 0.0;
}

Modulus monotone_conjugate(const Modulus& m, std::vector<double> dual_grid) {
  if (dual_grid.empty())
    throw std::invalid_argument("monotone_conjugate: empty dual grid");
  std::sort(dual_grid.begin(), dual_grid.end());
  if (dual_grid.front() > 0.0) dual_grid.insert(dual_grid.begin(), 0.0);
  std::vector<double> vals;
  vals.reserve(dual_grid.size());
  for (double v : dual_grid) vals.push_back(conjugate_value(m, v));
  return Modulus::tabulated(std::move(dual_grid), std::move(vals));
}

std::function<double(double)> biconjugate_evaluator(const Modulus& m) {
  switch (m.family()) {
    case Family::Zero:
    case Family::PlusInfBeyond:
      return [m](double u) { return m(u); };
    case Family::Power:
      if (m.param_p() >= 1 || m.param_c() == 0)
        return [m](double u) { return m(u); };
      return [](double) { return 0.0; };  // sublinear power: envelope is 0
    case Family::Quadratic:
      if (m.param_alpha() >= 0) return [m](double u) { return m(u); };
      return [](double) { return -kInf; };
    case Family::QuadraticMinusLinear: {
      const double beta = m.param_beta(), L = m.param_L();
      if (L <= 0) return [m](double u) { return m(u); };
      const double u0 = 2.0 * L / beta;
      return [beta, L, u0, m](double u) {
        return u <= u0 ? -2.0 * L * L / beta : m(u);
      };
    }
    case Family::Tabulated: {
      auto hx = std::make_shared<std::vector<double>>();
      auto hv = std::make_shared<std::vector<double>>();
      convex_envelope(m, *hx, *hv);
      return [hx, hv](double u) { return eval_envelope(*hx, *hv, u); };
    }
  }
  return [](double) { return 0.0; };
}

Modulus biconjugate(const Modulus& m, const std::vector<double>& grid) {
  switch (m.family()) {
    case Family::Zero:
    case Family::PlusInfBeyond:
      return m;
    case Family::Power:
      if (m.param_p() >= 1 || m.param_c() == 0) return m;
      break;
    case Family::Quadratic:
      if (m.param_alpha() >= 0) return m;
      break;
    default:
      break;
  }
  if (grid.empty()) throw std::invalid_argument("biconjugate: empty grid");
  auto ev = biconjugate_evaluator(m);
  std::vector<double> g(grid);
  std::sort(g.begin(), g.end());
  if (g.front() > 0.0) g.insert(g.begin(), 0.0);
  std::vector<double> vals;
  vals.reserve(g.size());
  for (double u : g) vals.push_back(ev(u));
  return Modulus::tabulated(std::move(g), std::move(vals));
}

double generalized_inverse_fn(const std::function<double(double)>& m, double t) {
  if (t < 0) throw std::domain_error("generalized_inverse: t must be >= 0");
  if (t == kInf) return kInf;
  if (m(0.0) > t) return 0.0;
  double hi = 1.0;
  while (m(hi) <= t) {
    hi *= 2.0;
    if (hi > 1e15) return kInf;
  }
  double lo = hi * 0.5 < 1.0 ? 0.0 : hi * 0.5;
  if (m(lo) > t) lo = 0.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (m(mid) <= t)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

double generalized_inverse(const Modulus& m, double t) {
  if (!is_nondecreasing(m))
    throw std::invalid_argument("generalized_inverse: modulus not non-decreasing: " +
                                m.describe());
  return generalized_inverse_fn([&m](double u) { return m(u); }, t);
}

Modulus inf_convolution(const Modulus& f, const Modulus& g,
                        const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("inf_convolution: empty grid");
  std::vector<double> xs(grid);
  std::sort(xs.begin(), xs.end());
  if (xs.front() > 0.0) xs.insert(xs.begin(), 0.0);
  std::vector<double> out(xs.size(), kInf);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    double best = kInf;
    for (std::size_t j = 0; j <= k; ++j) {
      const double fy = f(xs[j]);
      if (fy == kInf) continue;
      const double gz = g(xs[k] - xs[j]);
      if (gz == kInf) continue;
      if (fy == -kInf || gz == -kInf) {
        best = -kInf;
        break;
      }
      best = std::min(best, fy + gz);
    }
    out[k] = best;
  }
  return Modulus::tabulated(std::move(xs), std::move(out));
}

ComposeResult compose_regularity_bound(const Modulus& sigma_V, const Modulus& rho_W,
                                       double r) {
  if (r < 0) throw std::domain_error("compose_regularity_bound: r must be >= 0");
  for (double s : {0.0, r * 0.25, r * 0.5, r})
    if (sigma_V(s) < -1e-12)
      throw std::invalid_argument("compose_regularity_bound: sigma_V must be >= 0");
  auto rho_cc = biconjugate_evaluator(rho_W);
  // ginv needs a non-decreasing target; the convex envelope of a modulus is,
  // except for degenerate inputs which the probe below rejects.
  for (double a : {0.25, 0.5, 1.0, 2.0, 4.0})
    if (rho_cc(a * std::max(r, 1.0)) < rho_cc(0.5 * a * std::max(r, 1.0)) - 1e-9)
      throw std::invalid_argument("compose_regularity_bound: rho_W** not non-decreasing");
  if (r == 0) return {0.0, false};
  auto integrand = [&](double s) {
    const double t = sigma_V(s);
    if (t == kInf) return kInf;
    return generalized_inverse_fn(rho_cc, t);
  };
  QuadResult q = simpson_dyadic(integrand, 0.0, r);
  return {q.value, q.hit_infinity};
}

RadialModuli radial_modulus(const std::vector<double>& ts,
                            const std::vector<double>& alphas, double r) {
  if (ts.size() != alphas.size() || ts.size() < 2)
    throw std::invalid_argument("radial_modulus: bad table");
  if (ts.front() != 0.0 || alphas.front() != 0.0)
    throw std::invalid_argument("radial_modulus: table must start at alpha(0) = 0");
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    if (!(ts[i] < ts[i + 1]) || alphas[i] > alphas[i + 1] + 1e-12)
      throw std::invalid_argument("radial_modulus: alpha must be increasing");
  // Superhomogeneity alpha(c t) >= c alpha(t) spot-checked on table points.
  auto alpha_at = [&](double t) {
    auto it = std::upper_bound(ts.begin(), ts.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - ts.begin());
    if (hi == 0) return alphas.front();
    if (hi == ts.size()) return alphas.back();
    return detail::lerp_ext(ts[hi - 1], alphas[hi - 1], ts[hi], alphas[hi], t);
  };
  for (std::size_t i = 1; i < ts.size(); ++i)
    for (double c : {1.5, 2.0, 3.0}) {
      const double ct = c * ts[i];
      if (ct > ts.back()) continue;
      if (alpha_at(ct) < c * alphas[i] - 1e-9 * std::max(1.0, c * alphas[i]))
        throw std::invalid_argument("radial_modulus: superhomogeneity violated");
    }

  if (r < 0) throw std::domain_error("radial_modulus: r must be >= 0");
  if (r / 2.0 > ts.back() || r > alphas.back())
    throw std::invalid_argument("radial_modulus: table does not cover requested r");

  // Exact integral of the piecewise-linear table up to x.
  auto integral_alpha = [&](double x) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      const double a = ts[i], b = ts[i + 1];
      if (x <= a) break;
      const double ub = std::min(x, b);
      const double va = alphas[i];
      const double vb = detail::lerp_ext(a, alphas[i], b, alphas[i + 1], ub);
      acc += 0.5 * (va + vb) * (ub - a);
    }
    return acc;
  };
  // Inverse table: swap roles (alpha increasing), integrate alpha^{-1}.
  auto integral_alpha_inv = [&](double y) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      const double a = alphas[i], b = alphas[i + 1];
      if (y <= a) break;
      if (b == a) continue;  // flat alpha: inverse jump carries no area
      const double ub = std::min(y, b);
      const double va = ts[i];
      const double vb = detail::lerp_ext(a, ts[i], b, ts[i + 1], ub);
      acc += 0.5 * (va + vb) * (ub - a);
    }
    return acc;
  };
  RadialModuli out;
  out.rho = 2.0 * integral_alpha(r / 2.0);
  out.sigma = 2.0 * integral_alpha_inv(r);
  return out;
}

}  // namespace otreg

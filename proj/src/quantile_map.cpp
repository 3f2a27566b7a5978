#include "otreg/quantile_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace otreg {

QuantileMap1D::QuantileMap1D(const DiscreteMeasure& mu, const DiscreteMeasure& nu)
    : fmu_(mu), fnu_(nu) {
  if (mu.dim() != 1 || nu.dim() != 1)
    throw std::invalid_argument("QuantileMap1D: both measures must be 1D");
}

double QuantileMap1D::operator()(double x) const {
  if (x < fmu_.support_lo() || x > fmu_.support_hi()) {
    clamped_ = true;
    x = std::clamp(x, fmu_.support_lo(), fmu_.support_hi());
  }
  return fnu_.quantile(fmu_.cdf(x));
}

double quantile_map_1d(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double x) {
  return QuantileMap1D(mu, nu)(x);
}

}  // namespace otreg

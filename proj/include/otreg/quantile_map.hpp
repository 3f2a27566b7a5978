#pragma once

#include "otreg/measures.hpp"

namespace otreg {

/// Monotone rearrangement T = Q_nu o F_mu between 1D discrete measures with
/// interpolated CDFs.  Evaluation outside mu's support box clamps and raises
/// a flag.
class QuantileMap1D {
 public:
  QuantileMap1D(const DiscreteMeasure& mu, const DiscreteMeasure& nu);
  double operator()(double x) const;
  bool clamped() const { return clamped_; }
  double mu_cell() const { return fmu_.cell_width(); }
  double nu_cell() const { return fnu_.cell_width(); }

 private:
  PiecewiseCdf fmu_, fnu_;
  mutable bool clamped_ = false;
};

double quantile_map_1d(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double x);

}  // namespace otreg

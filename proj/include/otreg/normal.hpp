#pragma once

namespace otreg {

/// Standard normal distribution function, accurate in both tails.
double norm_cdf(double x);

/// Upper tail 1 - Phi(x) without cancellation.
double norm_sf(double x);

/// Inverse of norm_cdf to ~1e-12 (rational initial guess + Newton).
double norm_cdf_inv(double p);

double norm_pdf(double x);

}  // namespace otreg

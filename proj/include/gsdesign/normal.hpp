#pragma once

namespace gsd {

/// Standard normal density.
double norm_pdf(double x);

/// Standard normal CDF, accurate over the full double range.
double norm_cdf(double x);

/// Inverse standard normal CDF (Wichura's AS 241, double precision).
/// Throws ParameterError unless 0 < p < 1.
double norm_quantile(double p);

}  // namespace gsd

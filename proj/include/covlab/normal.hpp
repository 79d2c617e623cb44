#pragma once

namespace covlab::procedures {

/// Standard normal CDF, evaluated through erfc so both tails stay accurate.
double normal_cdf(double x);

/// Standard normal density.
double normal_pdf(double x);

/// Inverse standard normal CDF for p in (0, 1). Acklam's rational
/// approximation refined with two Halley steps against normal_cdf; absolute
/// error is far below 1e-10 over the full open interval.
/// Throws ContractError for p outside (0, 1).
double normal_quantile(double p);

}  // namespace covlab::procedures

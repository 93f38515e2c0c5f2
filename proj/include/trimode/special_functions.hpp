#pragma once

namespace trimode::sf {

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms),
/// relative error below 1e-13 on the positive axis.
double log_gamma(double x);

/// Exponentially scaled modified Bessel function e^{-x} I_nu(x).
/// Supports real orders nu > -1 and x >= 0.  Power series for small x,
/// asymptotic expansion at the fractional order plus a stable downward
/// ratio chain for large x.  The result never materializes e^{x}.
double bessel_i_scaled(double nu, double x);

/// Ratio I_{nu+1}(x) / I_nu(x), nu > -1, x >= 0, evaluated by a
/// continued fraction.  Lies in [0, 1) for nu >= 0 and increases in x.
double bessel_ratio(double nu, double x);

/// ln[ Gamma(a+1) / (Gamma(b+1) Gamma(a-b+1)) ] for real arguments with
/// all three Gamma arguments positive.
double log_binomial(double a, double b);

}  // namespace trimode::sf

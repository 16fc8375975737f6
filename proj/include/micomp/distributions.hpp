#pragma once

namespace micomp::dist {

// Special functions and CDFs used to turn test statistics into p-values.
// All functions are pure and thread-safe. Domain violations throw
// micomp::degenerate_error or std::domain_error-as-micomp::error; see each
// function.

/// Natural log of the gamma function, x > 0. Lanczos approximation,
/// absolute error below 1e-12 on [0.5, 1e6].
double ln_gamma(double x);

/// Regularized incomplete beta I_x(a, b); a, b > 0; 0 <= x <= 1.
/// Continued fraction (modified Lentz) with the symmetry switch at
/// x > (a+1)/(a+b+2).
double reg_inc_beta(double a, double b, double x);

/// Regularized lower incomplete gamma P(s, x); s > 0, x >= 0.
/// Series for x < s+1, continued fraction otherwise.
double reg_inc_gamma_lower(double s, double x);

/// Standard normal CDF via the complementary error function.
double normal_cdf(double z);

/// Standard normal quantile (inverse CDF), 0 < p < 1. Wichura's PPND16.
double normal_quantile(double p);

/// Student-t CDF, df > 0.
double t_cdf(double t, double df);

/// F CDF, f >= 0, df1 > 0, df2 > 0.
double f_cdf(double f, double df1, double df2);

/// Chi-squared CDF, x >= 0, df > 0.
double chisq_cdf(double x, double df);

} // namespace micomp::dist

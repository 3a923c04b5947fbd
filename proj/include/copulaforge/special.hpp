#pragma once

namespace copulaforge {

// Standard normal CDF, density and quantile.
double norm_cdf(double x);
double norm_pdf(double x);
double norm_quantile(double p); // bracketed root finding on norm_cdf

// Student t CDF / density / quantile with nu > 0 degrees of freedom.
double student_cdf(double x, double nu);
double student_pdf(double x, double nu);
double student_quantile(double p, double nu);

// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double a, double b, double x);

} // namespace copulaforge

#pragma once

#include <limits>

namespace jointrank::special {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

double norm_pdf(double x);
double norm_cdf(double x);   // via erfc, accurate in both tails
double norm_ppf(double p);   // piecewise polynomial tables, scaled error < 2e-14

double lgamma_pos(double x);  // log Gamma for x > 0 (Lanczos)

// Regularized incomplete gamma P(a, x) and its complement Q(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

double chi2_cdf(double x, double df);
double chi2_ppf(double p, double df);

// Regularized incomplete beta I_x(a, b).
double beta_inc(double a, double b, double x);

// Student-t distribution with real df > 0; df = infinity degrades to normal.
double t_pdf(double x, double df);
double t_cdf(double x, double df);
double t_ppf(double p, double df);

}  // namespace jointrank::special

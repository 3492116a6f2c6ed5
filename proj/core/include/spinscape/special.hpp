#pragma once

#include <cstddef>

namespace spinscape {

// I₁(x) = ∫_{√2}^{x} √(z²−2) dz  for x ≥ √2, in closed form:
//   ½ ( x√(x²−2) + log 2 − 2 log(x + √(x²−2)) )
// Nonnegative and increasing; throws DomainError below √2 (beyond a small snap
// tolerance for roundoff at the endpoint).
double I1(double x);

// Semicircle CDF  F(s) = (1/π) ∫_{−√2}^{s} √(2−x²) dx  on [−√2, √2].
double semicircle_cdf(double s);

// Quantile of the semicircle law: the s with F(s) = gamma, gamma ∈ (0,1).
// Bisection to 1e-12 on F. s is increasing in gamma, s(1/2) = 0.
double semicircle_quantile(double gamma);

// log Φ(x) of the standard normal CDF, stable for every x (deep left tail uses
// the scaled complementary error function's asymptotic series).
double log_normal_cdf(double x);

// log( Φ(hi) − Φ(lo) ) for hi > lo, stable in both tails and in the bulk.
// Either endpoint may be ±infinity.
double log_normal_cdf_diff(double lo, double hi);

// log(e^a − e^b) for a ≥ b.
double log_diff_exp(double a, double b);

// log(e^a + e^b).
double log_sum_exp(double a, double b);

// Fixed 8-point Gauss–Legendre rule on [a,b]; fills x[0..7], w[0..7].
void gauss_legendre_8(double a, double b, double *x, double *w);

} // namespace spinscape

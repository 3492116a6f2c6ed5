#pragma once

#include <spinscape/mixture.hpp>

namespace spinscape {

// Two-atom functional at inverse temperature β with the overlap weight r
// fixed to 0:
//   β²(1 − (1−m)ν(q)) + log(1−q) − (1/m) log((1−q)/(1−q+mq)).
// Requires 0 < m ≤ 1, 0 ≤ q ≤ 1, β > 0; q = 1 returns +∞.
double F1_two_atom(double m, double q, double beta, const Mixture& mix);

struct TwoAtomMinimum {
    double value;  // F₁(β) = ½ · minimum of the two-atom objective
    double m;
    double q;
};

// Minimizes the two-atom objective over the (m,q) box by grid search plus
// coordinate descent. The ½ normalization gives value/β → f₁ as β → ∞, with
// the minimizer scaling m·β → b*, (1−q)·β → a*.
TwoAtomMinimum f1_finite_beta(double beta, const Mixture& mix, int grid = 200);

// Inner infimum over a of ½(b + ν′a + (1/b) log((a+b)/a)), solved in closed
// form: stationarity ν′ = 1/(a(a+b)) gives a(b) = (−b + √(b²+4/ν′))/2.
double f1_of_b(double b, const Mixture& mix);

// Zero-temperature 1-RSB ground state f₁, a function of ν′ alone: a solves
//   a log a − a + 1 − (a−1)²/ν′ = 0,  a > 1,
// by bisection, then f₁ = y + (ν′−1)/(yν′) with y = √(a/ν′). At ν′ = 2 the
// root collapses onto a = 1 and the limit value √2 is returned directly.
double f1(const Mixture& mix);

// The same quantity by direct minimization of ½(b + ν′a + (1/b)log((a+b)/a))
// over (a,b), without the stationarity relations; check route for f1.
double f1_by_search(const Mixture& mix);

// c_ν = (ν′−2)/√(ν′(ν′−1)), left edge of the dual domain.
double c_nu(const Mixture& mix);

// Convex dual of the complexity: g₁(x) = x f₁(x) for x > c_ν, frozen at its
// c_ν value below. Strictly convex on (c_ν, ∞) with slope 2√((ν′−1)/ν′) at
// the edge.
double g1(double x, const Mixture& mix);

struct DualityPoint {
    double u;
    double theta0;     // closed-form θ₀(u)
    double legendre;   // min_{b ≥ c_ν} (ub + g₁(b))
    double minimizer;  // the minimizing b
    double residual;   // |theta0 − legendre|
};

// Both sides of the duality θ₀(u) = min_{b≥c_ν}(ub + g₁(b)) for u < −E_∞.
DualityPoint duality_point(double u, const Mixture& mix);

// ψ(u) = max_x (ux − g₁(x)), finite for u ≥ 0; equals −θ₀(−u) for u > E_∞.
double legendre_conjugate(double u, const Mixture& mix);

enum class F1Verdict { Equal, Less };

const char* to_string(F1Verdict verdict);

struct F1Report {
    double nu_prime;
    double nu_double;
    MixtureClass cls;
    double f1;
    double e0;
    double gap;  // e0 − f1
    F1Verdict verdict;
};

// Compares f₁ with the ground-state layer energy E₀: Equal within 1e-6 for
// pure-like and critical mixtures, Less for full mixtures. Throws
// InconsistentClassification when the verdict contradicts the class.
F1Report compare_f1_E0(const Mixture& mix);

} // namespace spinscape

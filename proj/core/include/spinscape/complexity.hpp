#pragma once

// Complexity functions for mixed spherical spin glasses.
//
// All quantities are exponential growth rates per unit dimension:
//   theta_k(u)      expected number of critical points of index k with
//                   energy below N·u grows like exp(N·θ_k(u))
//   theta_gamma(u)  same for index ~ γN, γ ∈ (0,1)
//   theta_total(u)  expected total number of critical points
//   layer_energy(k) E_k, the smallest zero of θ_k
//
// The k-fixed rate has two branches meeting at u = −E_∞:
//
//   θ_k(u) = ½ log(ν″/ν′) + F(−√2, u)                      u ≥ −E_∞
//          = ½ log(ν″/ν′) + F(λ*, u) − (k+1) I₁(−λ*)       u ≤ −E_∞
//
// with λ* = lambda_star(k,u) the stationary point of the Laplace–Varadhan
// variational principle. Below −E_∞ the value of θ₀ has a closed form that
// depends on ν′ only.

#include <vector>

#include "spinscape/mixture.hpp"
#include "spinscape/special.hpp"

namespace spinscape {

// F(λ,y) = ( −(ν″+ν′) y² + 2ν′√(2ν″) λy − (ν″−ν′+ν′²) λ² ) / (2α²).
// Gaussian exponent coupling an eigenvalue location λ to the energy y.
// Throws PureMixture when α² = 0 (the quadratic form degenerates).
double F_exponent(double lambda, double y, const Mixture &m);

struct LambdaStar {
    double value;       // root of the stationarity equation, in (bracket_lo, bracket_hi]
    double bracket_lo;  // λ_c = ν′√(2ν″) u / (ν″−ν′+ν′²)
    double bracket_hi;  // −√2
    double residual;    // unsquared stationarity residual at value
};

// Solves  ν′√(2ν″)u/α² − ((ν″−ν′+ν′²)/α²)·λ + (k+1)√(λ²−2) = 0  on (λ_c, −√2].
// Squaring gives a quadratic; its roots are filtered by the bracket and the
// unsquared residual, polished by Newton, with a bisection fallback on the
// original equation (which changes sign over the bracket). Requires u < −E_∞
// and α² > 0.
LambdaStar lambda_star(int k, double u, const Mixture &m);

// k-complexity function θ_k(u). Continuous in u; independent of k for
// u ≥ −E_∞; strictly decreasing in k below −E_∞. Pure mixtures use the α → 0
// limit: a constant plateau above −E_∞ and the ν′-only branch below.
double theta_k(int k, double u, const Mixture &m);

// Closed form of θ₀:
//   u ≥ −E_∞ : ½ log(ν″/ν′) + F(−√2, u)
//   u ≤ −E_∞ : ½ log(ν′−1) − u²(ν′−2)/(4(ν′−1)) − I₁(−uν′/(√2√(ν′(ν′−1))))
// The lower branch does not involve ν″.
double theta0_closed(double u, const Mixture &m);

struct SemicircleQuantile {
    double gamma;  // in (0,1)
    double s;      // in (−√2, √2), semicircle CDF at s equals gamma
};

// Quantile of the semicircle law on (−√2, √2): s increases with gamma,
// s(½) = 0, s → −√2 as gamma → 0.
SemicircleQuantile s_gamma(double gamma);

// Diverging-index complexity  θ_γ(u) = ½ log(ν″/ν′) + F(s_γ, u).
// Throws PureMixture when α² = 0.
double theta_gamma(double gamma, double u, const Mixture &m);

// Total-complexity rate, three branches joined continuously at ±E′_∞:
//   |u| ≥ E′_∞ : θ₀(−|u|)
//   |u| < E′_∞ : ½ ( log(ν″/ν′) − u²(ν″−ν′)(ν″+ν′)/(2ν″ν′²) )
// Even in u; maximum ½ log(ν″/ν′) at u = 0; equals Σ_ν at ±E′_∞.
double theta_total(double u, const Mixture &m);

// Layer energy E_k, the smallest zero of θ_k. For pure-like mixtures the
// unique root in (E_∞, ∞), found by bisection to 1e-10; for critical and full
// mixtures equal to E_∞⁺ for every k.
double layer_energy(int k, const Mixture &m);

// Brute-force check of the variational principle behind θ_k:
//   ½ [ log(ν″/ν′) + max { −x² + λ² − (ν′x − √(2ν″)λ)²/α² − 2(k+1) I₁(−λ) } ]
// over x ≤ u, λ ≤ −√2, evaluated by grid search with iterative zoom and no use
// of the lambda_star machinery. For u ≤ −E′_∞ the maximum sits at x = u and
// the value equals θ_k(u).
double variational_oracle(int k, double u, const Mixture &m,
                          int grid_points = 241, int zoom_rounds = 3);

struct VanishingExponents {
    double below_layers;  // θ_k at −E_k − ε: decay rate of critical values of
                          // index ≥ k below the k-th layer
    double above_band;    // θ_k at −E_∞⁻ + ε: decay rate of index-k critical
                          // values above the band
};

// Both exponents are strictly negative for ε > 0 and tend to 0 as ε → 0
// (below_layers only in the pure case, where above-band counts decay at speed
// N² and above_band is reported as −∞).
VanishingExponents vanishing_exponent(int k, double eps, const Mixture &m);

// u-axis regimes of the k-fixed complexity.
enum class CurveRegime {
    BelowEInf,          // u ≤ −E_∞
    AboveEInf,          // −E_∞ < u ≤ −E′_∞
    OscillatoryWindow,  // u > −E′_∞
};

const char* to_string(CurveRegime regime);

struct CurveKind {
    enum class Type { FiniteK, Gamma, Total };
    Type type = Type::Total;
    int k = 0;
    double gamma = 0.0;

    static CurveKind finite(int k) { return {Type::FiniteK, k, 0.0}; }
    static CurveKind diverging(double gamma) { return {Type::Gamma, 0, gamma}; }
    static CurveKind total() { return {Type::Total, 0, 0.0}; }
};

struct CurvePoint {
    double u;
    double theta;
    CurveRegime regime;
};

struct ComplexityCurve {
    CurveKind kind;
    std::vector<CurvePoint> points;
};

// Samples the selected complexity function on an inclusive u-grid.
// steps == 1 places the single sample at u_lo.
ComplexityCurve sample_curve(const CurveKind &kind, double u_lo, double u_hi,
                             int steps, const Mixture &m);

} // namespace spinscape

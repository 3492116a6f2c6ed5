#pragma once

// Physicists' Hermite polynomials h_j, the orthonormal Hermite functions
//   φ_j(x) = (2^j j! √π)^{−1/2} h_j(x) e^{−x²/2},
// and a Monte Carlo check of the GOE determinant identity
//   E det(M_n − xI) = 2^{−n} n^{−n/2} (−1)^n h_n(√n x).
//
// Everything is evaluated by stable three-term recurrences with explicit
// exponent bookkeeping, so degrees up to 10⁵ and arguments far outside the
// oscillatory band stay representable.

#include <cstdint>

#include "spinscape/signed_log.hpp"

namespace spinscape {

// φ_j at one point with the exponent factored out: the value is
// phi · e^{log_scale}. phi is kept within [1e-100, 1e100) by periodic
// rescaling; the true |φ_j| never exceeds π^{−1/4}.
struct HermiteEval {
    int j = 0;
    double x = 0.0;
    double phi = 0.0;
    double log_scale = 0.0;

    double log_abs() const;  // log|φ_j(x)|, −inf at exact zeros
    double value() const;    // phi · e^{log_scale}; may under/overflow double
};

// h_j(x) via h_{j+1} = 2x h_j − 2j h_{j−1}, h_0 = 1, h_1 = 2x, accumulated in
// SignedLog so factorial growth never overflows. h_2(x) = 4x² − 2.
SignedLog hermite_h(int j, double x);

// φ_j(x) via the normalized recurrence
//   φ_{j+1} = x √(2/(j+1)) φ_j − √(j/(j+1)) φ_{j−1},
// seeded by φ_0 = π^{−1/4} e^{−x²/2} with the Gaussian exponent placed in
// log_scale from the start.
HermiteEval hermite_phi(int j, double x);

// Draws `samples` GOE(n) matrices, averages det(M − xI) over the spectra, and
// compares with 2^{−n} n^{−n/2} (−1)^n h_n(√n x). Returns the standardized
// residual (mean − closed form)/stderr. Deterministic in (n, x, samples, seed).
// Throws DomainError for n < 1 or n > 12: the determinant's Monte Carlo
// variance grows factorially and the residual becomes meaningless.
double det_identity_check(int n, double x, int samples, std::uint64_t seed);

} // namespace spinscape

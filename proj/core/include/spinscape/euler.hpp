#pragma once

// Mean Euler characteristic of the sublevel sets A_u = {H ≤ Nu} of a mixed
// spherical spin-glass Hamiltonian on the sphere of dimension N−1, exactly and
// asymptotically, plus the Plancherel–Rotach asymptotics and oscillatory
// integrals the asymptotic formula is built from.
//
// Exact value: after reducing the two-dimensional Kac–Rice integrand by the
// rotation z = ν′x − αy, w = αx + ν′y, the w-integral is a Gaussian mass in
// closed form and
//
//   E χ(A_u) = (−1)^{N−1} K(N,ν) ∫ φ_{N−1}(√N z) e^{−N c₂ z²} Φ(s_w W̃(z)) dz
//
// with c₂ = (ν″−ν′)/(2(ν″+ν′)), W̃(z) = (A_u − ν′z)/α, A_u = (ν″+ν′)u/√(2ν″),
// s_w = √(2Nν″/(ν″+ν′)), and K collecting the χ-density prefactor
// c(N,ν) = 2ν″ ((N−1)!√π)^{1/2} 2^{−(N−1)/2} N / (√π Γ(N/2)), the covariance
// ratio power (ν″/ν′)^{(N−1)/2} and the w-width √(π(ν″+ν′)/(Nν″))/(ν″+ν′).
//
// Asymptotics in u: below −E′_∞ the value grows like e^{NΘ_ν(u)} with the
// total-complexity rate; inside (−E′_∞, E′_∞) it oscillates O(N) times, driven
// by the endpoint M = (ν″+ν′)u/(√(2ν″)ν′) of the effective phase; above E′_∞
// the parity reflection E χ(A_u) = 2 − E χ(A_{−u}) (N odd), = E χ(A_{−u})
// (N even) applies.

#include <cstdint>
#include <optional>

#include "spinscape/hermite.hpp"
#include "spinscape/mixture.hpp"
#include "spinscape/signed_log.hpp"

namespace spinscape {

// Exact E χ(A_u) by 1D quadrature of the reduced integrand: Gauss–Legendre
// panels of width π/(10√2 N) (at least twenty nodes per bulk oscillation of
// φ_{N−1}(√N·)), truncated where the log-envelope falls `log_window` below its
// maximum. Doubling the window moves the result by < 1e-10 relative; the
// quadrature itself targets 1e-8. Throws PureMixture when α² = 0 and
// DomainError for n < 2.
SignedLog euler_exact(int n, double u, const Mixture &mix,
                      double log_window = 40.0);

// Asymptotic regions of the Hermite function φ_{N−1}(√N x).
enum class PrRegion { ExpLeft, Oscillatory, ExpRight };

const char *to_string(PrRegion region);

// Large-N value of φ_{N−1}(√N x) in the requested region:
//   Oscillatory, |x| < √2 :
//     2^{1/4} π^{−1/2} N^{−1/4} (sin ω)^{−1/2} sin(Nτ(ω) + ω/2 + 3π/4),
//     ω = arccos(x/√2), τ(ω) = ½(sin 2ω − 2ω)
//   ExpRight, x > √2 :
//     2^{−1/4} π^{−1/2} N^{−1/4} (x²−2)^{−1/4} (x+√(x²−2))^{−1/2} e^{−N I₁(x)}
//   ExpLeft, x < −√2 : (−1)^{N−1} × ExpRight at −x
// Throws EdgeRegion within 0.1 of ±√2 (the Airy collar is evaluated exactly by
// hermite_phi instead) and DomainError when x lies outside the named region.
double pr_asymptotic(PrRegion region, double x, int n);

enum class OscMode { Direct, Asymptotic };

// I_N(M) = ∫_M^∞ φ_{N−1}(√N x) e^{−N(ax²+bx)} dx for a > ½, b ≥ 0.
//
// Direct: oscillation-resolving panel quadrature (step π/(10√2 N), envelope
// truncation as in euler_exact). Asymptotic, by the position of M:
//   M > √2  : endpoint term  φ_{N−1}(√N M) e^{−N(aM²+bM)} / (N(2aM+b+√(M²−2)))
//   |M| < √2: endpoint term of the integration by parts against the bulk phase,
//             2^{1/4} π^{−1/2} N^{−5/4} (sin ω)^{−1/2} e^{−N(aM²+bM)}
//               · sin(Nτ(ω) + ω/2 + 3π/4 + α_i)/r,  ω = arccos(M/√2),
//             r = |(2√2 a cos ω + b, √2 sin ω)|, α_i its polar angle
//   M < −√2 : exponent only, {+1, −Nλ*} with
//             λ* = min over [M, −√2] of ax² + bx + I₁(−x)
// Asymptotic mode throws EdgeRegion within 0.1 of ±√2.
SignedLog oscillatory_integral(double M, double a, double b, int n,
                               OscMode mode);

// Oscillation bookkeeping of the in-window asymptotic, in the parametrization
// u = −E′_∞ cos ω, ω ∈ (0, π). The value's sign equals sin(Nτ(ω) + ρ(ω)) and
// ρ(ω) = −½τ(ω) + 3π/4 + α(ω) identically; amp is the positive ω-dependent
// factor multiplying the universal amplitude c(N,ν) e^{−Nc₂M²}-chain. τ ≤ 0 on
// (0, π); ρ and α absorb the O(N) phase drag of the Gaussian-CDF window (see
// euler_asymptotic), so they carry an N-dependence.
struct OscillationDescriptor {
    double omega = 0.0;
    double tau = 0.0;
    double rho = 0.0;
    double amp = 0.0;
    double alpha_phase = 0.0;
    SignedLog c_prefactor;  // c(N,ν)
};

struct EulerAsymptotic {
    SignedLog value;
    int part = 0;  // 1: u ≤ −E′_∞, 2: −E′_∞ < u ≤ 0, 3: u > 0
    std::optional<OscillationDescriptor> descriptor;  // parts 2 and 3
};

// Three-regime asymptotic of E χ(A_u):
//
// part (1), u ≤ −E′_∞: exponent only, {+1, N Θ_ν(u)} with the total-complexity
// rate Θ_ν (the endpoint reduction of the integral reproduces Θ_ν exactly, so
// no separate formula is carried).
//
// part (2), −E′_∞ < u ≤ 0: the φ-phase is linearized at the endpoint M while
// the Gaussian-CDF window Φ(−(z−M)/σ), σ² = α²(ν″+ν′)/(2ν″ν′²N), is kept
// exactly; with ν_c = N(i√2 sin ι − 2c₂M), ι = arccos(M/√2) = π − ω, and
// μ = σν_c,
//
//   value = (−1)^{N−1} K(N,ν) A(ι) e^{−Nc₂M²} Im[ e^{i(Nτ(ι)+ι/2+3π/4)}
//                                                  e^{μ²/2} / ν_c ],
//   A(ι) = 2^{1/4} π^{−1/2} N^{−1/4} (sin ι)^{−1/2}.
//
// The e^{μ²/2} factor is the closed form of ∫Φ(−t/σ)e^{ν_c t}dt = e^{μ²/2}/ν_c;
// dropping it (pure endpoint term) misstates the amplitude by e^{N sin²ι·σ²N}
// and decorrelates the sign pattern near u = 0. Re μ²/2 shifts the growth rate
// off NΘ_ν, Im μ²/2 drags the phase; both are O(N).
//
// part (3), u > 0: parity reflection of part (2)/(1); for N odd the value is
// 2 − value(−u) in SignedLog arithmetic.
//
// Throws PureMixture when α² = 0, DomainError for n < 2, EdgeWindow when
// ω = arccos(−u/E′_∞) is within 0.05 of {0, π}.
EulerAsymptotic euler_asymptotic(int n, double u, const Mixture &mix);

} // namespace spinscape

#pragma once

#include <spinscape/mixture.hpp>
#include <spinscape/signed_log.hpp>

#include <cstdint>
#include <vector>

namespace spinscape {

// One draw of the Gaussian Orthogonal Ensemble: a symmetric n×n matrix with
// independent centered Gaussian entries of variance E M_ij² = (1+δ_ij)/(2n),
// reduced to its ordered spectrum.
struct SpectralSample {
    int n = 0;
    std::vector<double> eigenvalues; // ascending
    std::uint64_t seed = 0;
};

// Monte Carlo estimate of a mean critical point count. The mean lives in log
// scale because the counts grow like e^{nΣ}; its sign is 0 or +1.
struct RiceEstimate {
    SignedLog mean;
    double stderr_rel = 0.0; // relative standard error of the mean
    int samples = 0;
    int n = 0;
    int k = -1; // index constraint; −1 means summed over every index
    double band_lo = 0.0;
    double band_hi = 0.0;
};

// Deterministic per (n, seed); eigenvalues from a symmetric eigensolver.
SpectralSample sample_goe(int n, std::uint64_t seed);

// Mean number of critical points of index k with energy in n·(band_lo, band_hi],
// through the identity
//   E Crt_{n,k}(B) = C(n,ν) ∫_B E_GOE[ exp{ (n/2α²)(−Sλ_k² + 2ν′√(2ν″)λ_k y
//                                                       − (ν″+ν′)y²) } ] dy
// with C(n,ν) = 2√(nν′/(πα²)) (ν″/ν′)^{n/2}. For fixed λ_k the y-integral is a
// Gaussian mass, taken in closed form via the normal CDF: center
// ν′√(2ν″)λ_k/(ν″+ν′), variance α²/(n(ν″+ν′)), and the full-line weight
// e^{−nλ_k²(ν″−ν′)/(2(ν″+ν′))}. Monte Carlo runs over GOE(n) draws of λ_k.
// Half-infinite bands are allowed. Identical (seed, samples) give bit-identical
// estimates for any worker count.
RiceEstimate crt_mean_identity(int n, int k, double band_lo, double band_hi,
                               const Mixture &mix, int samples,
                               std::uint64_t seed);

// Same draws without the index constraint: the per-draw value sums the
// exponential over all n eigenvalues, so per-k estimates from the same seed
// partition this total exactly.
RiceEstimate crt_mean_total(int n, double band_lo, double band_hi,
                            const Mixture &mix, int samples,
                            std::uint64_t seed);

// Critical points of one sampled Hamiltonian restricted to the circle
// σ = √2(cosθ, sinθ), listed in increasing θ. Minima and maxima alternate.
struct CircleCriticalPoints {
    std::vector<double> theta;
    std::vector<double> value; // H(θ)/n, the per-site energy level
    std::vector<bool> is_min;
};

// Counts from brute-force Morse analysis of H on the circle (n = 2 only):
// H(θ) = √2 Σ_p β_p Σ_m √C(p,m) g_{p,m} cos^{p−m}θ sin^mθ with g i.i.d.
// standard Gaussians, which realizes E H(θ)H(θ′) = 2ν(cos(θ−θ′)).
struct DirectCounts {
    RiceEstimate minima; // k = 0, value ≤ level
    RiceEstimate maxima; // k = 1, value ≤ level
    RiceEstimate total;  // either index, value ≤ level
};

// Single-draw critical point solve: dH/dθ sign changes on a 4096-point grid,
// refined by bisection to 1e-10, classified by second difference. The grid is
// refined and the solve retried whenever the alternation structure fails to
// close. Throws UnsupportedDimension unless n = 2.
CircleCriticalPoints direct_critical_points(int n, const Mixture &mix,
                                            std::uint64_t seed);

// Mean counts over `samples` independent draws. Every draw is checked for
// alternation, equal minimum and maximum counts, and agreement between the
// alternating count (#min ≤ level) − (#max ≤ level) and the number of arcs of
// the sublevel set. level may be ±∞. Throws UnsupportedDimension unless n = 2.
DirectCounts direct_count_full(int n, const Mixture &mix, double level,
                               int samples, std::uint64_t seed);

// The k = 0 slice of direct_count_full: mean number of local minima with
// energy at most n·level.
RiceEstimate direct_count(int n, const Mixture &mix, double level, int samples,
                          std::uint64_t seed);

} // namespace spinscape

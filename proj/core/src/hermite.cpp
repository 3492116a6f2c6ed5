#include "spinscape/hermite.hpp"

#include <cmath>
#include <vector>

#include "spinscape/errors.hpp"
#include "spinscape/goe.hpp"
#include "spinscape/rng.hpp"

namespace spinscape {

double HermiteEval::log_abs() const {
    if (phi == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(phi)) + log_scale;
}

double HermiteEval::value() const { return phi * std::exp(log_scale); }

SignedLog hermite_h(int j, double x) {
    if (j < 0) throw DomainError("hermite_h requires j >= 0");
    SignedLog prev = SignedLog::one();             // h_0
    if (j == 0) return prev;
    SignedLog cur = SignedLog::from_real(2.0 * x); // h_1
    const SignedLog two_x = SignedLog::from_real(2.0 * x);
    for (int m = 1; m < j; ++m) {
        SignedLog next = two_x * cur - SignedLog::from_real(2.0 * m) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

HermiteEval hermite_phi(int j, double x) {
    if (j < 0) throw DomainError("hermite_phi requires j >= 0");
    constexpr double kPiQuarterInv = 0.75112554446494251;  // π^{−1/4}
    HermiteEval out;
    out.j = j;
    out.x = x;
    double prev = kPiQuarterInv;  // φ_0 with the Gaussian factored out
    double scale = -0.5 * x * x;
    if (j == 0) {
        out.phi = prev;
        out.log_scale = scale;
        return out;
    }
    double cur = x * std::sqrt(2.0) * prev;  // φ_1
    for (int m = 1; m < j; ++m) {
        const double next =
            x * std::sqrt(2.0 / (m + 1)) * cur - std::sqrt(double(m) / (m + 1)) * prev;
        prev = cur;
        cur = next;
        const double mag = std::max(std::abs(cur), std::abs(prev));
        if (mag > 1e100 || (mag < 1e-100 && mag > 0.0)) {
            const double k = std::log(mag);
            const double f = std::exp(-k);
            prev *= f;
            cur *= f;
            scale += k;
        }
    }
    out.phi = cur;
    out.log_scale = scale;
    return out;
}

double det_identity_check(int n, double x, int samples, std::uint64_t seed) {
    if (n < 1 || n > 12)
        throw DomainError("det_identity_check requires 1 <= n <= 12");
    if (samples < 2) throw DomainError("det_identity_check requires samples >= 2");
    // closed form 2^{−n} n^{−n/2} (−1)^n h_n(√n x)
    const SignedLog closed =
        hermite_h(n, std::sqrt(double(n)) * x)
            .scaled(-n * std::log(2.0) - 0.5 * n * std::log(double(n)));
    const double target = (n % 2 == 0 ? 1.0 : -1.0) * closed.to_real();
    double mean = 0.0, m2 = 0.0;
    for (int i = 0; i < samples; ++i) {
        const SpectralSample s = sample_goe(n, derive_seed(seed, i));
        double det = 1.0;
        for (double lam : s.eigenvalues) det *= lam - x;
        const double delta = det - mean;
        mean += delta / (i + 1);
        m2 += delta * (det - mean);
    }
    const double stderr_mean = std::sqrt(m2 / (double(samples) - 1.0) / samples);
    if (stderr_mean == 0.0) return 0.0;
    return (mean - target) / stderr_mean;
}

} // namespace spinscape

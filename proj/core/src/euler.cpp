#include "spinscape/euler.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "spinscape/complexity.hpp"
#include "spinscape/errors.hpp"
#include "spinscape/special.hpp"

namespace spinscape {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kEdgeDelta = 0.1;   // Airy collar half-width around ±√2
constexpr double kEdgeOmega = 0.05;  // excluded window ends in ω

// τ(ω) = ½(sin 2ω − 2ω), the bulk phase integral of φ_{N−1}(√N·) per unit N.
double tau_of(double omega) { return 0.5 * (std::sin(2.0 * omega) - 2.0 * omega); }

struct MixValues {
    double np, nd, al2, al, r, c2, au, sw, m_end;
};

MixValues mix_values(int n, double u, const Mixture &mix, const char *who) {
    const double np = mix.nu_prime(), nd = mix.nu_double();
    const double al2 = nd + np - np * np;
    if (al2 <= 0.0) throw PureMixture(std::string(who) + " requires α² > 0");
    MixValues v;
    v.np = np;
    v.nd = nd;
    v.al2 = al2;
    v.al = std::sqrt(al2);
    v.r = nd / np;
    v.c2 = (nd - np) / (2.0 * (nd + np));
    v.au = (nd + np) * u / std::sqrt(2.0 * nd);
    v.sw = std::sqrt(2.0 * n * nd / (nd + np));
    v.m_end = v.au / np;
    return v;
}

// log c(N,ν) = log 2ν″ + ½ log((N−1)!√π) − (N−1)/2 log 2 + log N − ½ log π
//            − log Γ(N/2)
double log_c_prefactor(int n, double nd) {
    return std::log(2.0 * nd) + 0.5 * (std::lgamma(double(n)) + 0.5 * std::log(kPi)) -
           0.5 * (n - 1) * std::log(2.0) + std::log(double(n)) -
           0.5 * std::log(kPi) - std::lgamma(0.5 * n);
}

// Constant multiplying the z-integral in E χ(A_u): the χ-density prefactor,
// the covariance power and the closed-form w-width.
double log_chain(int n, const MixValues &v) {
    return 0.5 * (n - 1) * std::log(v.r) + log_c_prefactor(n, v.nd) -
           std::log(v.nd + v.np) +
           0.5 * (std::log(kPi) + std::log(v.nd + v.np) - std::log(double(n)) -
                  std::log(v.nd));
}

// Signed panel quadrature of amp(z)·e^{lg(z)} over [lo, hi]: Gauss–Legendre 8
// on panels of width `step`, everything scaled by e^{−lg_ref}.
template <class Eval>
SignedLog panel_integrate(double lo, double hi, double step, double lg_ref,
                          Eval &&eval) {
    double sum = 0.0;
    const int panels = std::max(1, int(std::ceil((hi - lo) / step)));
    const double h = (hi - lo) / panels;
    double xs[8], ws[8];
    for (int p = 0; p < panels; ++p) {
        gauss_legendre_8(lo + p * h, lo + (p + 1) * h, xs, ws);
        for (int q = 0; q < 8; ++q) {
            double amp, lg;
            eval(xs[q], amp, lg);
            sum += ws[q] * amp * std::exp(lg - lg_ref);
        }
    }
    if (sum == 0.0) return SignedLog::zero();
    return SignedLog::from_log(sum > 0 ? 1 : -1,
                               lg_ref + std::log(std::abs(sum)));
}

// Envelope bounds: log-magnitude grid scan, clipped where it drops
// `drop` below the maximum. Returns {lo, hi, max}.
struct Bounds {
    double lo, hi, peak;
};

template <class LogMag>
Bounds envelope_bounds(double lo, double hi, int pts, double drop,
                       LogMag &&log_mag) {
    std::vector<double> lg(pts);
    double peak = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < pts; ++i) {
        const double z = lo + (hi - lo) * i / (pts - 1);
        lg[i] = log_mag(z);
        peak = std::max(peak, lg[i]);
    }
    int il = 0, ir = pts - 1;
    while (il < pts - 1 && lg[il] < peak - drop) ++il;
    while (ir > 0 && lg[ir] < peak - drop) --ir;
    const double cell = (hi - lo) / (pts - 1);
    Bounds b;
    b.lo = lo + cell * std::max(0, il - 1);
    b.hi = lo + cell * std::min(pts - 1, ir + 1);
    b.peak = peak;
    return b;
}

} // namespace

SignedLog euler_exact(int n, double u, const Mixture &mix, double log_window) {
    if (n < 2) throw DomainError("euler_exact requires n >= 2");
    if (log_window <= 0.0) throw DomainError("euler_exact needs a positive window");
    const MixValues v = mix_values(n, u, mix, "euler_exact");
    const double rn = std::sqrt(double(n));
    const auto log_mag = [&](double z) {
        return hermite_phi(n - 1, rn * z).log_abs() - n * v.c2 * z * z +
               log_normal_cdf(v.sw * (v.au - v.np * z) / v.al);
    };
    const double zmax = std::max(4.0, std::abs(v.m_end) + 2.0);
    double lo = -zmax, hi = zmax;
    Bounds b{};
    for (int tries = 0;; ++tries) {
        b = envelope_bounds(lo, hi, 1601, log_window + 5.0, log_mag);
        const double cell = (hi - lo) / 1600.0;
        const bool open_lo = b.lo < lo + 1.5 * cell;  // envelope still alive
        const bool open_hi = b.hi > hi - 1.5 * cell;  // at the scan edge
        if ((!open_lo && !open_hi) || tries == 10) break;
        const double span = hi - lo;
        if (open_lo) lo -= 0.5 * span;
        if (open_hi) hi += 0.5 * span;
    }
    const double step = kPi / (10.0 * kSqrt2 * n);
    const SignedLog j = panel_integrate(
        b.lo, b.hi, step, b.peak, [&](double z, double &amp, double &lg) {
            const HermiteEval e = hermite_phi(n - 1, rn * z);
            amp = e.phi;
            lg = e.log_scale - n * v.c2 * z * z +
                 log_normal_cdf(v.sw * (v.au - v.np * z) / v.al);
        });
    const int parity = (n % 2 == 1) ? 1 : -1;
    return SignedLog::from_log(parity, log_chain(n, v)) * j;
}

const char *to_string(PrRegion region) {
    switch (region) {
    case PrRegion::ExpLeft: return "exp_left";
    case PrRegion::Oscillatory: return "oscillatory";
    case PrRegion::ExpRight: return "exp_right";
    }
    return "?";
}

double pr_asymptotic(PrRegion region, double x, int n) {
    if (n < 2) throw DomainError("pr_asymptotic requires n >= 2");
    if (std::abs(std::abs(x) - kSqrt2) < kEdgeDelta)
        throw EdgeRegion("pr_asymptotic is not valid within 0.1 of ±√2");
    switch (region) {
    case PrRegion::Oscillatory: {
        if (std::abs(x) > kSqrt2)
            throw DomainError("oscillatory region needs |x| < √2");
        const double omega = std::acos(x / kSqrt2);
        const double amp = std::pow(2.0, 0.25) /
                           (std::sqrt(kPi) * std::pow(double(n), 0.25) *
                            std::sqrt(std::sin(omega)));
        return amp * std::sin(n * tau_of(omega) + 0.5 * omega + 0.75 * kPi);
    }
    case PrRegion::ExpRight: {
        if (x < kSqrt2) throw DomainError("exp_right region needs x > √2");
        const double s = std::sqrt(x * x - 2.0);
        const double log_amp = -0.25 * std::log(2.0) - 0.5 * std::log(kPi) -
                               0.25 * std::log(double(n)) -
                               0.25 * std::log(x * x - 2.0) -
                               0.5 * std::log(x + s) - n * I1(x);
        return std::exp(log_amp);
    }
    case PrRegion::ExpLeft: {
        if (x > -kSqrt2) throw DomainError("exp_left region needs x < −√2");
        const int parity = (n % 2 == 1) ? 1 : -1;
        return parity * pr_asymptotic(PrRegion::ExpRight, -x, n);
    }
    }
    throw DomainError("unknown region");
}

SignedLog oscillatory_integral(double M, double a, double b, int n,
                               OscMode mode) {
    if (n < 2) throw DomainError("oscillatory_integral requires n >= 2");
    if (!(a > 0.5)) throw DomainError("oscillatory_integral requires a > 1/2");
    if (!(b >= 0.0)) throw DomainError("oscillatory_integral requires b >= 0");
    if (mode == OscMode::Direct) {
        const double rn = std::sqrt(double(n));
        const auto log_mag = [&](double z) {
            return hermite_phi(n - 1, rn * z).log_abs() - n * (a * z * z + b * z);
        };
        double hi = std::max(M, kSqrt2) + 3.0;
        Bounds bd{};
        for (int tries = 0;; ++tries) {
            bd = envelope_bounds(M, hi, 1601, 45.0, log_mag);
            const double cell = (hi - M) / 1600.0;
            if (bd.hi < hi - 1.5 * cell || tries == 10) break;
            hi += 0.5 * (hi - M);
        }
        bd.lo = M;  // the endpoint itself is never clipped
        const double step = kPi / (10.0 * kSqrt2 * n);
        return panel_integrate(bd.lo, bd.hi, step, bd.peak,
                               [&](double z, double &amp, double &lg) {
                                   const HermiteEval e = hermite_phi(n - 1, rn * z);
                                   amp = e.phi;
                                   lg = e.log_scale - n * (a * z * z + b * z);
                               });
    }
    if (std::abs(std::abs(M) - kSqrt2) < kEdgeDelta)
        throw EdgeRegion("asymptotic mode is not valid within 0.1 of ±√2");
    if (M > kSqrt2) {
        // single smooth endpoint: value φ_{N−1}(√N M)e^{−N(aM²+bM)} over the
        // total decay rate N(g′ + I₁′) at M
        const double s = std::sqrt(M * M - 2.0);
        const double log_amp = -0.25 * std::log(2.0) - 0.5 * std::log(kPi) -
                               0.25 * std::log(double(n)) -
                               0.25 * std::log(M * M - 2.0) -
                               0.5 * std::log(M + s) - n * I1(M);
        const double lv = log_amp - n * (a * M * M + b * M) -
                          std::log(n * (2.0 * a * M + b + s));
        return SignedLog::from_log(1, lv);
    }
    if (M > -kSqrt2) {
        // oscillatory endpoint of the integration by parts against the bulk
        // phase N√2 sin ω
        const double omega = std::acos(M / kSqrt2);
        const double gp = 2.0 * kSqrt2 * a * std::cos(omega) + b;
        const double so = kSqrt2 * std::sin(omega);
        const double r = std::hypot(gp, so);
        const double alpha_i = std::atan2(so, gp);
        const double phase =
            n * tau_of(omega) + 0.5 * omega + 0.75 * kPi + alpha_i;
        const double sp = std::sin(phase);
        if (sp == 0.0) return SignedLog::zero();
        const double lv = 0.25 * std::log(2.0) - 0.5 * std::log(kPi) -
                          1.25 * std::log(double(n)) -
                          0.5 * std::log(std::sin(omega)) - std::log(r) -
                          n * (a * M * M + b * M) + std::log(std::abs(sp));
        return SignedLog::from_log(sp > 0 ? 1 : -1, lv);
    }
    // entire decay exponent: minimum of ax² + bx + I₁(−x) over [M, −√2]
    const auto q = [&](double x) { return a * x * x + b * x + I1(-x); };
    const int pts = 4001;
    double best_x = M, best = q(M);
    for (int i = 1; i < pts; ++i) {
        const double x = M + (-kSqrt2 - M) * i / (pts - 1);
        const double val = q(x);
        if (val < best) {
            best = val;
            best_x = x;
        }
    }
    double lo = std::max(M, best_x - (-kSqrt2 - M) / (pts - 1));
    double hi = std::min(-kSqrt2, best_x + (-kSqrt2 - M) / (pts - 1));
    for (int it = 0; it < 200; ++it) {  // ternary refinement
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (q(m1) < q(m2))
            hi = m2;
        else
            lo = m1;
    }
    best = std::min(best, q(0.5 * (lo + hi)));
    // φ_{n−1} is single-signed left of −√2, with the parity of its degree
    return SignedLog::from_log(n % 2 == 0 ? -1 : 1, -n * best);
}

EulerAsymptotic euler_asymptotic(int n, double u, const Mixture &mix) {
    if (n < 2) throw DomainError("euler_asymptotic requires n >= 2");
    const MixValues v = mix_values(n, u, mix, "euler_asymptotic");
    const double ep = 2.0 * v.np * std::sqrt(v.nd) / (v.nd + v.np);
    EulerAsymptotic out;
    if (u <= -ep) {
        out.part = 1;
        out.value = SignedLog::from_log(1, n * theta_total(u, mix));
        return out;
    }
    if (u > 0.0) {
        // parity reflection: E χ(A_u) = 2 − E χ(A_{−u}) for N odd, equal for
        // N even
        EulerAsymptotic inner = euler_asymptotic(n, -u, mix);
        out.part = 3;
        out.value = (n % 2 == 1)
                        ? SignedLog::from_real(2.0) - inner.value
                        : inner.value;
        if (inner.descriptor) {
            OscillationDescriptor d = *inner.descriptor;
            d.omega = kPi - inner.descriptor->omega;
            d.tau = tau_of(d.omega);
            d.rho = inner.descriptor->rho - 2.0 * n * d.tau;
            d.alpha_phase = d.rho - 0.75 * kPi + 0.5 * d.tau;
            out.descriptor = d;
        }
        return out;
    }
    // part (2): −E′_∞ < u ≤ 0, endpoint M ∈ (−√2, 0], ι = arccos(M/√2)
    const double omega = std::acos(std::min(1.0, -u / ep));
    if (omega < kEdgeOmega || omega > kPi - kEdgeOmega)
        throw EdgeWindow("u too close to the window ends ±E'_inf");
    const double iota = kPi - omega;
    const double m_end = v.m_end;
    const double tau_i = tau_of(iota);
    const double gp = 2.0 * v.c2 * m_end;          // envelope slope at M
    const double pp = kSqrt2 * std::sin(iota);     // phase slope per N at M
    const std::complex<double> nu_c(-double(n) * gp, double(n) * pp);
    const double sig2 = v.al2 * (v.nd + v.np) / (2.0 * v.nd * v.np * v.np * n);
    const std::complex<double> mu2 = sig2 * nu_c * nu_c;
    const double phase_eff = n * tau_i + 0.5 * iota + 0.75 * kPi +
                             0.5 * mu2.imag() - std::arg(nu_c);
    const double log_amp_j = 0.5 * mu2.real() - std::log(std::abs(nu_c));
    const double log_a = 0.25 * std::log(2.0) - 0.5 * std::log(kPi) -
                         0.25 * std::log(double(n)) -
                         0.5 * std::log(std::sin(iota));
    const double sp = std::sin(phase_eff);
    out.part = 2;
    if (sp == 0.0) {
        out.value = SignedLog::zero();
    } else {
        const int parity = (n % 2 == 1) ? 1 : -1;
        const double lv = log_chain(n, v) + log_a - n * v.c2 * m_end * m_end +
                          log_amp_j + std::log(std::abs(sp));
        out.value = SignedLog::from_log(parity * (sp > 0 ? 1 : -1), lv);
    }
    OscillationDescriptor d;
    d.omega = omega;
    d.tau = tau_of(omega);
    d.rho = -(0.5 * iota + 0.75 * kPi + 0.5 * mu2.imag() - std::arg(nu_c));
    d.alpha_phase = d.rho - 0.75 * kPi + 0.5 * d.tau;
    d.amp = n * std::exp(0.5 * mu2.real()) / std::abs(nu_c);
    d.c_prefactor = SignedLog::from_log(1, log_c_prefactor(n, v.nd));
    out.descriptor = d;
    return out;
}

} // namespace spinscape

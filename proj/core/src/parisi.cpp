#include <spinscape/parisi.hpp>

#include <spinscape/complexity.hpp>
#include <spinscape/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace spinscape {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Argmin of f on [lo, hi] by golden-section search.
template <typename F>
double golden_min(F&& f, double lo, double hi) {
    const double gr = 0.6180339887498949;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0;
         it < 220 && hi - lo > 1e-14 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

// ½(b + ν′a + (1/b) log((a+b)/a)) without the inner optimization.
double raw_objective(double a, double b, double np) {
    return 0.5 * (b + np * a + std::log1p(b / a) / b);
}

// Stable optimal a(b) = (−b + √(b²+4/ν′))/2.
double inner_a(double b, double np) {
    return (2.0 / np) / (b + std::sqrt(b * b + 4.0 / np));
}

// φ(b) = b f₁(b); envelope derivative at the optimal inner a:
// φ′(b) = f₁(b) + ½(b + 1/(a+b) − (1/b) log((a+b)/a)).
double phi_prime(double b, double np) {
    const double a = inner_a(b, np);
    return raw_objective(a, b, np) +
           0.5 * (b + 1.0 / (a + b) - std::log1p(b / a) / b);
}

// g₁′ at the left edge c_ν (also the pure ground-state proxy 2√((ν′−1)/ν′)).
double edge_slope(double np) { return 2.0 * std::sqrt((np - 1.0) / np); }

} // namespace

double F1_two_atom(double m, double q, double beta, const Mixture& mix) {
    if (!(m > 0.0 && m <= 1.0)) throw DomainError("m must lie in (0,1]");
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("q must lie in [0,1]");
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (q == 1.0) return std::numeric_limits<double>::infinity();
    return beta * beta * (1.0 - (1.0 - m) * mix.nu(q)) + std::log1p(-q) +
           std::log1p(m * q / (1.0 - q)) / m;
}

TwoAtomMinimum f1_finite_beta(double beta, const Mixture& mix, int grid) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (grid < 16) throw DomainError("grid must be at least 16");

    double bm = 1.0;
    double bq = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= grid; ++i) {
        const double m = static_cast<double>(i) / grid;
        for (int j = 0; j < grid; ++j) {
            const double q = static_cast<double>(j) / grid;
            const double v = F1_two_atom(m, q, beta, mix);
            if (v < best) {
                best = v;
                bm = m;
                bq = q;
            }
        }
    }

    double w = 2.0 / grid;
    for (int round = 0; round < 60; ++round) {
        bm = golden_min(
            [&](double m) { return F1_two_atom(m, bq, beta, mix); },
            std::max(1e-12, bm - w), std::min(1.0, bm + w));
        bq = golden_min(
            [&](double q) { return F1_two_atom(bm, q, beta, mix); },
            std::max(0.0, bq - w), std::min(1.0 - 1e-15, bq + w));
        w = std::max(w * 0.6, 1e-13);
    }
    return {0.5 * F1_two_atom(bm, bq, beta, mix), bm, bq};
}

double f1_of_b(double b, const Mixture& mix) {
    if (!(b > 0.0)) throw DomainError("f1_of_b requires b > 0");
    const double np = mix.nu_prime();
    return raw_objective(inner_a(b, np), b, np);
}

double f1(const Mixture& mix) {
    const double np = mix.nu_prime();
    if (np - 2.0 < 1e-9) return kSqrt2;

    // a log a − a + 1 − (a−1)²/ν′: positive just above a = 1, negative for
    // large a, strictly one crossing
    auto g = [np](double a) {
        return a * std::log(a) - a + 1.0 - (a - 1.0) * (a - 1.0) / np;
    };
    double lo = 1.0 + 1e-10;
    double hi = 2.0;
    while (g(hi) > 0.0) {
        hi *= 2.0;
        if (hi > 1e9) throw BracketFailure("a-equation bracket did not close");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    const double a = 0.5 * (lo + hi);
    const double y = std::sqrt(a / np);
    return y + (np - 1.0) / (y * np);
}

double f1_by_search(const Mixture& mix) {
    const double np = mix.nu_prime();
    double ba = 1.0;
    double bb = 1.0;
    double best = std::numeric_limits<double>::infinity();
    const int n = 200;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const double a = 10.0 * i / n;
            const double b = 10.0 * j / n;
            const double v = raw_objective(a, b, np);
            if (v < best) {
                best = v;
                ba = a;
                bb = b;
            }
        }
    }
    for (int round = 0; round < 40; ++round) {
        ba = golden_min([&](double a) { return raw_objective(a, bb, np); },
                        1e-10, 10.0);
        bb = golden_min([&](double b) { return raw_objective(ba, b, np); },
                        1e-10, 10.0);
    }
    return raw_objective(ba, bb, np);
}

double c_nu(const Mixture& mix) {
    const double np = mix.nu_prime();
    return (np - 2.0) / std::sqrt(np * (np - 1.0));
}

double g1(double x, const Mixture& mix) {
    const double edge = c_nu(mix);
    if (x > edge) return x * f1_of_b(x, mix);
    // constant continuation; at ν′ = 2 the edge sits at 0 with b f₁(b) → 0
    return edge > 0.0 ? edge * f1_of_b(edge, mix) : 0.0;
}

DualityPoint duality_point(double u, const Mixture& mix) {
    const MixtureProfile pr = profile(mix);
    if (!(u < -pr.e_inf)) throw DomainError("duality requires u < -E_inf");
    const double np = mix.nu_prime();
    const double edge = c_nu(mix);

    // minimize ub + g₁(b): the slope u + φ′(b) is strictly increasing with a
    // negative value at the edge (φ′(c_ν) = 2√((ν′−1)/ν′) ≤ E_∞ < −u)
    double lo = std::max(edge, 1e-12);
    double hi = std::max(2.0 * lo, 2.0);
    while (u + phi_prime(hi, np) < 0.0) {
        hi *= 2.0;
        if (hi > 1e9) throw BracketFailure("duality slope bracket did not close");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (u + phi_prime(mid, np) < 0.0 ? lo : hi) = mid;
    }
    const double b = 0.5 * (lo + hi);
    const double legendre = u * b + g1(b, mix);
    const double theta = theta0_closed(u, mix);
    return {u, theta, legendre, b, std::abs(theta - legendre)};
}

double legendre_conjugate(double u, const Mixture& mix) {
    if (!(u >= 0.0)) throw DomainError("conjugate requires u >= 0");
    const double np = mix.nu_prime();
    const double edge = c_nu(mix);
    if (u <= edge_slope(np)) {
        // below the edge slope the maximum of ux − g₁(x) sits at x = c_ν
        return u * edge - g1(edge, mix);
    }
    double lo = std::max(edge, 1e-12);
    double hi = std::max(2.0 * lo, 2.0);
    while (u - phi_prime(hi, np) > 0.0) {
        hi *= 2.0;
        if (hi > 1e9) throw BracketFailure("conjugate slope bracket did not close");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (u - phi_prime(mid, np) > 0.0 ? lo : hi) = mid;
    }
    const double x = 0.5 * (lo + hi);
    return u * x - g1(x, mix);
}

const char* to_string(F1Verdict verdict) {
    return verdict == F1Verdict::Equal ? "equal" : "less";
}

F1Report compare_f1_E0(const Mixture& mix) {
    const MixtureProfile pr = profile(mix);
    const double f = f1(mix);
    const double e0 = layer_energy(0, mix);
    const double gap = e0 - f;

    F1Verdict verdict;
    if (std::abs(gap) < 1e-6) {
        verdict = F1Verdict::Equal;
    } else if (f < e0 - 1e-6) {
        verdict = F1Verdict::Less;
    } else {
        throw InconsistentClassification("f1 exceeds E0 beyond tolerance");
    }

    const bool want_equal = pr.cls != MixtureClass::FullMixture;
    if (want_equal != (verdict == F1Verdict::Equal))
        throw InconsistentClassification(
            "f1 vs E0 verdict contradicts the mixture class");
    return {pr.nu_prime, pr.nu_double, pr.cls, f, e0, gap, verdict};
}

} // namespace spinscape

#include "spinscape/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spinscape/errors.hpp"
#include "spinscape/parallel.hpp"

namespace spinscape {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

double half_log_ratio(const MixtureProfile &pr) {
    return 0.5 * std::log(pr.nu_double / pr.nu_prime);
}

// S = ν″ − ν′ + ν′², the λ² coefficient of −2α²F.
double coef_s(const MixtureProfile &pr) {
    return pr.nu_double - pr.nu_prime + pr.nu_prime * pr.nu_prime;
}

double f_exponent(double lambda, double y, const MixtureProfile &pr) {
    double np = pr.nu_prime, nd = pr.nu_double;
    return (-(nd + np) * y * y + 2.0 * np * std::sqrt(2.0 * nd) * lambda * y -
            coef_s(pr) * lambda * lambda) /
           (2.0 * pr.alpha2);
}

// θ_k below −E_∞ in the α → 0 form: ν′ is the only mixture input. With k = 0
// this is also the closed form of θ₀ below −E_∞ for every mixture.
double theta_below_nu_prime_only(int k, double u, double np) {
    double lam = -u * np / (kSqrt2 * std::sqrt(np * (np - 1.0)));
    return 0.5 * std::log(np - 1.0) - u * u * (np - 2.0) / (4.0 * (np - 1.0)) -
           (k + 1.0) * I1(lam);
}

// Constant value of every pure-case θ_k above −E_∞.
double pure_plateau(double np) {
    return 0.5 * std::log(np - 1.0) - (np - 2.0) / np;
}

LambdaStar lambda_star_impl(int k, double u, const MixtureProfile &pr) {
    double a2 = pr.alpha2;
    double P = coef_s(pr) / a2;
    double Q = pr.nu_prime * std::sqrt(2.0 * pr.nu_double) * u / a2;
    double K = k + 1.0;
    double lambda_c = Q / P;

    auto psi = [&](double l) { return Q - P * l + K * std::sqrt(l * l - 2.0); };
    auto psi_prime = [&](double l) { return -P + K * l / std::sqrt(l * l - 2.0); };

    // Attainable evaluation accuracy of ψ at λ. Near the branch point the
    // last bits of λ² − 2 are lost and the error of the square root grows
    // like 1/√(λ²−2), so a fixed residual floor cannot be certified there.
    const double eps = std::numeric_limits<double>::epsilon();
    auto psi_noise = [&](double l) {
        double v = l * l - 2.0;
        double from_sqrt = v > eps ? K * eps * l * l / (2.0 * std::sqrt(v))
                                   : K * std::sqrt(eps);
        return 4.0 * eps * (std::abs(Q) + std::abs(P * l)) + 2.0 * from_sqrt;
    };
    auto accept_tol = [&](double l) { return std::max(1e-12, 8.0 * psi_noise(l)); };

    // At the seam the bracket collapses onto −√2 and the root sits at its
    // right endpoint to working precision.
    if (-kSqrt2 - lambda_c < 1e-13) {
        return {-kSqrt2, lambda_c, -kSqrt2, psi(-kSqrt2)};
    }

    auto polish = [&](double l) {
        for (int it = 0; it < 4; ++it) {
            double d = psi_prime(l);
            if (d == 0.0) break;
            l -= psi(l) / d;
            l = std::clamp(l, lambda_c, -kSqrt2);
        }
        return l;
    };

    // Squaring Q − Pλ = −K√(λ²−2) gives (P²−K²)λ² − 2PQλ + (Q²+2K²) = 0; one
    // root is spurious. Near P = K the quadratic degenerates to a linear
    // equation.
    double best = std::numeric_limits<double>::quiet_NaN();
    double best_res = std::numeric_limits<double>::infinity();
    auto consider = [&](double cand) {
        if (!(cand > lambda_c && cand <= -kSqrt2 + 1e-9)) return;
        double l = polish(std::min(cand, -kSqrt2));
        double r = std::abs(psi(l));
        if (r < best_res) {
            best_res = r;
            best = l;
        }
    };

    double pk = P * P - K * K;
    if (std::abs(pk) < 1e-6 * P * P) {
        consider((Q * Q + 2.0 * K * K) / (2.0 * P * Q));
    } else {
        double disc = std::sqrt(std::max(Q * Q - 2.0 * P * P + 2.0 * K * K, 0.0));
        consider((P * Q + K * disc) / pk);
        consider((P * Q - K * disc) / pk);
    }

    if (!(std::isfinite(best) && best_res < accept_tol(best))) {
        // ψ decreases strictly over the bracket: ψ(λ_c) = K√(λ_c²−2) > 0 and
        // ψ(−√2) = P(λ_c + √2) < 0, so bisection cannot fail.
        double lo = lambda_c, hi = -kSqrt2;
        if (!(psi(lo) > 0.0 && psi(hi) < 0.0))
            throw BracketFailure("stationarity equation has no sign change over "
                                 "(lambda_c, -sqrt(2)]");
        for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
            double mid = 0.5 * (lo + hi);
            (psi(mid) > 0.0 ? lo : hi) = mid;
        }
        best = polish(0.5 * (lo + hi));
        best_res = std::abs(psi(best));
        if (!(best_res < accept_tol(best)))
            throw BracketFailure("stationarity residual did not converge");
    }
    return {best, lambda_c, -kSqrt2, psi(best)};
}

double theta_k_impl(int k, double u, const Mixture &m, const MixtureProfile &pr) {
    if (m.is_pure()) {
        if (u >= -pr.e_inf) return pure_plateau(pr.nu_prime);
        return theta_below_nu_prime_only(k, u, pr.nu_prime);
    }
    if (u >= -pr.e_inf) return half_log_ratio(pr) + f_exponent(-kSqrt2, u, pr);
    LambdaStar ls = lambda_star_impl(k, u, pr);
    return half_log_ratio(pr) + f_exponent(ls.value, u, pr) -
           (k + 1.0) * I1(-ls.value);
}

void require_index(int k) {
    if (k < 0) throw DomainError("index k must be nonnegative");
}

void require_mixed(const Mixture &m, const char *what) {
    if (m.is_pure())
        throw PureMixture(std::string(what) + " is undefined for a pure mixture (alpha^2 = 0)");
}

} // namespace

double F_exponent(double lambda, double y, const Mixture &m) {
    require_mixed(m, "F exponent");
    return f_exponent(lambda, y, profile(m));
}

LambdaStar lambda_star(int k, double u, const Mixture &m) {
    require_index(k);
    require_mixed(m, "lambda_star");
    MixtureProfile pr = profile(m);
    if (!(u < -pr.e_inf))
        throw DomainError("lambda_star requires u < -E_inf");
    return lambda_star_impl(k, u, pr);
}

double theta_k(int k, double u, const Mixture &m) {
    require_index(k);
    return theta_k_impl(k, u, m, profile(m));
}

double theta0_closed(double u, const Mixture &m) {
    MixtureProfile pr = profile(m);
    if (u >= -pr.e_inf) {
        if (m.is_pure()) return pure_plateau(pr.nu_prime);
        return half_log_ratio(pr) + f_exponent(-kSqrt2, u, pr);
    }
    return theta_below_nu_prime_only(0, u, pr.nu_prime);
}

SemicircleQuantile s_gamma(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw DomainError("gamma must lie in (0,1)");
    return {gamma, semicircle_quantile(gamma)};
}

double theta_gamma(double gamma, double u, const Mixture &m) {
    require_mixed(m, "theta_gamma");
    double s = s_gamma(gamma).s;
    MixtureProfile pr = profile(m);
    return half_log_ratio(pr) + f_exponent(s, u, pr);
}

double theta_total(double u, const Mixture &m) {
    MixtureProfile pr = profile(m);
    double a = std::abs(u);
    if (a >= pr.e_inf_prime) return theta0_closed(-a, m);
    double np = pr.nu_prime, nd = pr.nu_double;
    return 0.5 * (std::log(nd / np) -
                  u * u * (nd - np) * (nd + np) / (2.0 * nd * np * np));
}

double layer_energy(int k, const Mixture &m) {
    require_index(k);
    MixtureProfile pr = profile(m);
    if (pr.cls != MixtureClass::PureLike) return pr.e_inf_plus;

    // θ_k(−E) is strictly decreasing in E past E_∞ and equals G/2 > 0 at the
    // seam, so the root bracket only needs growth on the right.
    double lo = pr.e_inf + 1e-12;
    double hi = pr.e_inf + 0.5;
    while (theta_k_impl(k, -hi, m, pr) > 0.0) {
        hi = pr.e_inf + 2.0 * (hi - pr.e_inf);
        if (hi > 1e6) throw BracketFailure("layer energy bracket did not close");
    }
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        (theta_k_impl(k, -mid, m, pr) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double variational_oracle(int k, double u, const Mixture &m, int grid_points,
                          int zoom_rounds) {
    require_index(k);
    require_mixed(m, "variational oracle");
    if (grid_points < 9) throw DomainError("grid_points must be at least 9");
    if (zoom_rounds < 0) throw DomainError("zoom_rounds must be nonnegative");

    MixtureProfile pr = profile(m);
    double np = pr.nu_prime, nd = pr.nu_double, a2 = pr.alpha2;
    double sq = std::sqrt(2.0 * nd);
    auto objective = [&](double x, double l) {
        double g = np * x - sq * l;
        return -x * x + l * l - g * g / a2 - 2.0 * (k + 1.0) * I1(-l);
    };

    // The x-maximizer is either the boundary x = u or the interior ridge near
    // −E′_∞, both well inside a window of a few units.
    double x_lo = u - 8.0, x_hi = u;
    double lambda_c = np * sq * u / coef_s(pr);
    double l_hi = -kSqrt2;
    double l_lo = std::min(lambda_c, l_hi) - 6.0;

    double best = -std::numeric_limits<double>::infinity();
    double best_x = x_hi, best_l = l_hi;
    for (int round = 0; round <= zoom_rounds; ++round) {
        int n = grid_points;
        double hx = (x_hi - x_lo) / (n - 1);
        double hl = (l_hi - l_lo) / (n - 1);
        for (int i = 0; i < n; ++i) {
            double x = x_lo + hx * i;
            for (int j = 0; j < n; ++j) {
                double l = std::min(l_lo + hl * j, -kSqrt2);
                double v = objective(x, l);
                if (v > best) {
                    best = v;
                    best_x = x;
                    best_l = l;
                }
            }
        }
        x_lo = best_x - 2.0 * hx;
        x_hi = std::min(best_x + 2.0 * hx, u);
        l_lo = best_l - 2.0 * hl;
        l_hi = std::min(best_l + 2.0 * hl, -kSqrt2);
    }
    return 0.5 * (std::log(nd / np) + best);
}

VanishingExponents vanishing_exponent(int k, double eps, const Mixture &m) {
    require_index(k);
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    MixtureProfile pr = profile(m);
    double ek = layer_energy(k, m);
    double below = theta_k_impl(k, -ek - eps, m, pr);
    // Above the band the pointwise rate is the dashed parabola past its larger
    // zero. Pure models decay at speed N^2 there, past every finite rate.
    double above = m.is_pure()
                       ? -std::numeric_limits<double>::infinity()
                       : theta_k_impl(k, -pr.e_inf_minus + eps, m, pr);
    return {below, above};
}

const char *to_string(CurveRegime regime) {
    switch (regime) {
    case CurveRegime::BelowEInf:
        return "below_Einf";
    case CurveRegime::AboveEInf:
        return "mid";
    case CurveRegime::OscillatoryWindow:
        return "above_Einfprime";
    }
    return "unknown";
}

ComplexityCurve sample_curve(const CurveKind &kind, double u_lo, double u_hi,
                             int steps, const Mixture &m) {
    if (steps < 1) throw DomainError("steps must be at least 1");
    if (!(u_hi >= u_lo)) throw DomainError("u range is inverted");

    MixtureProfile pr = profile(m);
    double s = 0.0;
    if (kind.type == CurveKind::Type::Gamma) {
        require_mixed(m, "theta_gamma");
        s = s_gamma(kind.gamma).s;
    } else if (kind.type == CurveKind::Type::FiniteK) {
        require_index(kind.k);
    }

    ComplexityCurve curve{kind, std::vector<CurvePoint>(steps)};
    parallel_for(static_cast<std::size_t>(steps), [&](std::size_t i) {
        double u = steps == 1
                       ? u_lo
                       : u_lo + (u_hi - u_lo) * static_cast<double>(i) / (steps - 1.0);
        double th = 0.0;
        switch (kind.type) {
        case CurveKind::Type::FiniteK:
            th = theta_k_impl(kind.k, u, m, pr);
            break;
        case CurveKind::Type::Gamma:
            th = half_log_ratio(pr) + f_exponent(s, u, pr);
            break;
        case CurveKind::Type::Total:
            th = theta_total(u, m);
            break;
        }
        CurveRegime r = u <= -pr.e_inf
                            ? CurveRegime::BelowEInf
                            : (u <= -pr.e_inf_prime ? CurveRegime::AboveEInf
                                                    : CurveRegime::OscillatoryWindow);
        curve.points[i] = {u, th, r};
    });
    return curve;
}

} // namespace spinscape

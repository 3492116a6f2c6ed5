#include "spinscape/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spinscape/errors.hpp"

namespace spinscape {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

// erfcx(t) = e^{t²} erfc(t) for large t > 0 via the alternating asymptotic
// series 1/(t√π) Σ (−1)^k (2k−1)!!/(2t²)^k, truncated at the smallest term.
double erfcx_large(double t) {
    const double inv2t2 = 1.0 / (2.0 * t * t);
    double mag = 1.0, sum = 1.0;
    int sign = 1;
    for (int k = 1; k < 64; ++k) {
        const double next = mag * (2 * k - 1) * inv2t2;
        if (next >= mag) break; // asymptotic tail starts growing
        mag = next;
        sign = -sign;
        sum += sign * mag;
        if (mag < 1e-18 * sum) break;
    }
    return sum / (t * std::sqrt(kPi));
}
} // namespace

double I1(double x) {
    if (x < kSqrt2 - 1e-9)
        throw DomainError("I1 requires x >= sqrt(2)");
    const double r = std::sqrt(std::max(0.0, x * x - 2.0));
    return 0.5 * (x * r + std::log(2.0) - 2.0 * std::log(x + r));
}

double semicircle_cdf(double s) {
    if (s <= -kSqrt2) return 0.0;
    if (s >= kSqrt2) return 1.0;
    const double r = std::sqrt(2.0 - s * s);
    return (0.5 * s * r + std::asin(s / kSqrt2) + 0.5 * kPi) / kPi;
}

double semicircle_quantile(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw DomainError("semicircle_quantile requires gamma in (0,1)");
    double lo = -kSqrt2, hi = kSqrt2;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        (semicircle_cdf(mid) < gamma ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double log_normal_cdf(double x) {
    if (x == kInf) return 0.0;
    if (x == -kInf) return -kInf;
    const double t = -x / kSqrt2; // Φ(x) = ½ erfc(t)
    if (t < 8.0)
        return std::log(0.5 * std::erfc(t));
    return -t * t + std::log(0.5 * erfcx_large(t));
}

double log_diff_exp(double a, double b) {
    if (b == -kInf) return a;
    if (b >= a) return -kInf;
    return a + std::log1p(-std::exp(b - a));
}

double log_sum_exp(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    const double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

double log_normal_cdf_diff(double lo, double hi) {
    if (!(hi > lo))
        throw DomainError("log_normal_cdf_diff requires hi > lo");
    // Reflect so the dominant CDF value sits on the well-conditioned side.
    if (lo > -hi)
        return log_diff_exp(log_normal_cdf(-lo), log_normal_cdf(-hi));
    return log_diff_exp(log_normal_cdf(hi), log_normal_cdf(lo));
}

void gauss_legendre_8(double a, double b, double *x, double *w) {
    static const double node[4] = {
        0.18343464249564980, 0.52553240991632899,
        0.79666647741362674, 0.96028985649753623};
    static const double weight[4] = {
        0.36268378337836198, 0.31370664587788729,
        0.22238103445337447, 0.10122853629037626};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int i = 0; i < 4; ++i) {
        x[2 * i] = c - h * node[i];
        x[2 * i + 1] = c + h * node[i];
        w[2 * i] = w[2 * i + 1] = h * weight[i];
    }
}

} // namespace spinscape

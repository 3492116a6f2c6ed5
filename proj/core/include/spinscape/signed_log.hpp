#pragma once

#include <cmath>
#include <limits>

namespace spinscape {

// Signed log-scale scalar: sign ∈ {−1,0,+1} plus log|x|. Carrier for
// exponentially large/small quantities (expected counts, mean Euler
// characteristics) that overflow double far before N reaches useful sizes.
struct SignedLog {
    int sign = 0;
    double log_abs = -std::numeric_limits<double>::infinity();

    SignedLog() = default;
    SignedLog(int s, double la) : sign(s), log_abs(la) {
        if (sign == 0) log_abs = -std::numeric_limits<double>::infinity();
    }

    static SignedLog zero() { return SignedLog(); }
    static SignedLog one() { return SignedLog(1, 0.0); }

    static SignedLog from_real(double x) {
        if (x == 0.0 || std::isnan(x)) return SignedLog();
        return SignedLog(x > 0 ? 1 : -1, std::log(std::abs(x)));
    }

    // sign * exp(log_abs) with log_abs supplied directly (already in log scale)
    static SignedLog from_log(int sign, double log_abs) {
        return sign == 0 ? SignedLog() : SignedLog(sign, log_abs);
    }

    double to_real() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_abs);
    }

    bool is_zero() const { return sign == 0; }

    SignedLog operator-() const { return SignedLog(-sign, log_abs); }

    SignedLog operator*(const SignedLog &o) const {
        if (sign == 0 || o.sign == 0) return SignedLog();
        return SignedLog(sign * o.sign, log_abs + o.log_abs);
    }

    SignedLog operator/(const SignedLog &o) const {
        return SignedLog(sign * o.sign, log_abs - o.log_abs);
    }

    // log-sum-exp with sign handling; exact cancellation yields zero()
    SignedLog operator+(const SignedLog &o) const {
        if (sign == 0) return o;
        if (o.sign == 0) return *this;
        const SignedLog &big = (log_abs >= o.log_abs) ? *this : o;
        const SignedLog &small = (log_abs >= o.log_abs) ? o : *this;
        const double d = small.log_abs - big.log_abs; // ≤ 0
        if (sign == o.sign)
            return SignedLog(big.sign, big.log_abs + std::log1p(std::exp(d)));
        const double m = 1.0 - std::exp(d);
        if (m <= 0.0) return SignedLog(); // equal magnitudes, opposite signs
        return SignedLog(big.sign, big.log_abs + std::log(m));
    }

    SignedLog operator-(const SignedLog &o) const { return *this + (-o); }

    SignedLog &operator+=(const SignedLog &o) { return *this = *this + o; }
    SignedLog &operator*=(const SignedLog &o) { return *this = *this * o; }

    // multiply by exp(t) without leaving log scale
    SignedLog scaled(double log_factor) const {
        if (sign == 0) return *this;
        return SignedLog(sign, log_abs + log_factor);
    }
};

inline SignedLog pow(const SignedLog &x, double p) {
    if (x.sign == 0) return x;
    // only meaningful for positive base or integer-like use at call sites
    return SignedLog(x.sign < 0 ? -1 : 1, p * x.log_abs);
}

} // namespace spinscape

#include "doctest.h"

#include <spinscape/errors.hpp>
#include <spinscape/hermite.hpp>
#include <spinscape/signed_log.hpp>
#include <spinscape/special.hpp>

#include <cmath>
#include <vector>

using namespace spinscape;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Σ wᵢ f(xᵢ) over uniform panels of Gauss-Legendre-8 nodes on [lo, hi]
template <typename F>
double panel_quadrature(double lo, double hi, double step, F&& f) {
    const int panels = static_cast<int>(std::ceil((hi - lo) / step));
    const double h = (hi - lo) / panels;
    double acc = 0.0;
    std::vector<double> x(8), w(8);
    for (int p = 0; p < panels; ++p) {
        gauss_legendre_8(lo + p * h, lo + (p + 1) * h, x.data(), w.data());
        for (int i = 0; i < 8; ++i) acc += w[i] * f(x[i]);
    }
    return acc;
}

} // namespace

TEST_CASE("physicists polynomials match closed forms for low degree") {
    const double xs[] = {-2.3, -0.7, 0.0, 0.4, 1.9};
    for (double x : xs) {
        CHECK(hermite_h(0, x).to_real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(hermite_h(1, x).to_real() ==
              doctest::Approx(2.0 * x).epsilon(1e-14));
        CHECK(hermite_h(2, x).to_real() ==
              doctest::Approx(4.0 * x * x - 2.0).epsilon(1e-13));
        CHECK(hermite_h(3, x).to_real() ==
              doctest::Approx(8.0 * x * x * x - 12.0 * x).epsilon(1e-13));
    }
    // h₁₀(0.7) from the explicit degree-10 coefficient table
    CHECK(hermite_h(10, 0.7).to_real() ==
          doctest::Approx(38802.8260350976).epsilon(1e-12));
}

TEST_CASE("polynomials have the parity of their degree") {
    const double xs[] = {0.3, 1.1, 2.7};
    for (int j = 0; j <= 20; ++j) {
        for (double x : xs) {
            const SignedLog a = hermite_h(j, x);
            const SignedLog b = hermite_h(j, -x);
            const double expect = (j % 2 == 0) ? 1.0 : -1.0;
            CHECK(b.to_real() / a.to_real() ==
                  doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("wave functions match frozen reference values") {
    // φ_j(x) = h_j(x) e^{−x²/2} / √(2^j j! √π); references from 60-digit
    // arbitrary-precision evaluation of that formula
    CHECK(hermite_phi(0, 0.0).value() ==
          doctest::Approx(0.75112554446494248).epsilon(1e-14));
    CHECK(hermite_phi(25, 1.0).value() ==
          doctest::Approx(0.22252509899194143).epsilon(1e-12));
    CHECK(hermite_phi(500, 0.3).value() ==
          doctest::Approx(-0.14153886370837493).epsilon(1e-9));
    CHECK(hermite_phi(500, 1.0).value() ==
          doctest::Approx(0.13854646864529426).epsilon(1e-9));

    // deep in the exponential region the value only fits in log form
    const HermiteEval far = hermite_phi(500, 25.0);
    CHECK(far.log_abs() == doctest::Approx(-2.2549512494290880).epsilon(1e-9));
    CHECK(far.phi > 0.0);
}

TEST_CASE("wave function agrees with the polynomial route") {
    // log φ_j(x) = log h_j(x) − x²/2 − ½(j log2 + log j! + ½ log π)
    const int j = 25;
    const double x = 1.0;
    const double log_norm =
        0.5 * (j * std::log(2.0) + std::lgamma(j + 1.0) +
               0.5 * std::log(kPi));
    const SignedLog h = hermite_h(j, x);
    const double via_h = h.log_abs - 0.5 * x * x - log_norm;
    const HermiteEval phi = hermite_phi(j, x);
    CHECK(phi.log_abs() == doctest::Approx(via_h).epsilon(1e-10));
    CHECK((phi.phi > 0.0) == (h.sign > 0));
}

TEST_CASE("wave functions are orthonormal under quadrature") {
    // mass of φ_8 lies well inside |x| ≤ 8, so [−9, 9] captures every inner
    // product below to quadrature accuracy
    for (int j = 0; j <= 8; ++j) {
        for (int k = j; k <= 8; ++k) {
            const double inner =
                panel_quadrature(-9.0, 9.0, 0.125, [&](double x) {
                    return hermite_phi(j, x).value() *
                           hermite_phi(k, x).value();
                });
            const double expect = (j == k) ? 1.0 : 0.0;
            CHECK(std::abs(inner - expect) < 1e-8);
        }
    }
}

TEST_CASE("wave functions stay uniformly bounded") {
    const int degrees[] = {0, 1, 2, 5, 8, 25, 100, 500};
    for (int j : degrees) {
        const double reach = std::sqrt(2.0 * (j + 1.0)) + 4.0;
        for (int i = 0; i <= 400; ++i) {
            const double x = -reach + 2.0 * reach * i / 400.0;
            CHECK(hermite_phi(j, x).log_abs() <= std::log(1.1));
        }
    }
}

TEST_CASE("wave function evaluation survives extreme degree") {
    const double xs[] = {0.0, 0.5, 31.6, 447.3};
    for (double x : xs) {
        const HermiteEval e = hermite_phi(100000, x);
        CHECK(std::isfinite(e.phi));
        CHECK(std::isfinite(e.log_scale));
        CHECK(e.log_abs() <= std::log(1.1));
    }
}

TEST_CASE("determinant identity holds at n = 1") {
    // E det(G − x) = E(λ − x) = −x for the 1×1 ensemble, and the identity's
    // right side is (−1)·2^{−1}·1^{−1/2} h₁(√1 x) = −x as well
    const double z = det_identity_check(1, 0.3, 20000, 11);
    CHECK(std::abs(z) < 4.0);
}

TEST_CASE("determinant identity holds at n = 2, x = 0") {
    // E det G = E(λ₁λ₂) = −E tr(G²)/2 + (E tr G)²... closed form −1/4 under
    // the E g_ii² = 1/n normalization, matching 2^{−2}·2^{−1}·h₂(0) = −1/4
    const double z = det_identity_check(2, 0.0, 20000, 17);
    CHECK(std::abs(z) < 4.0);
}

TEST_CASE("determinant identity holds at n = 6, x = 1") {
    const double z = det_identity_check(6, 1.0, 20000, 23);
    CHECK(std::abs(z) < 4.0);
}

TEST_CASE("determinant check is deterministic in the seed") {
    const double a = det_identity_check(4, 0.7, 2000, 99);
    const double b = det_identity_check(4, 0.7, 2000, 99);
    CHECK(a == b);
}

TEST_CASE("determinant check rejects unsupported sizes") {
    CHECK_THROWS_AS(det_identity_check(0, 0.0, 100, 1), DomainError);
    CHECK_THROWS_AS(det_identity_check(13, 0.0, 100, 1), DomainError);
}

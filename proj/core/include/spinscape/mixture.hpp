#pragma once

#include <string>
#include <vector>

namespace spinscape {

// One monomial of the covariance generator: weight is β_p² (the squared
// coefficient; every downstream formula consumes squares only).
struct MixtureTerm {
    int p;
    double weight;
};

// ν(t) = Σ β_p² t^p with ν(1) = 1, finite support, degrees ≥ 2.
class Mixture {
public:
    // Validates and builds. With normalize set, weights are rescaled to sum 1;
    // otherwise a sum off by more than 1e-9 is rejected.
    static Mixture make(std::vector<MixtureTerm> terms, bool normalize = false);

    const std::vector<MixtureTerm> &terms() const { return terms_; }

    double nu(double t) const;        // ν(t)
    double nu_prime() const { return np_; }   // ν′(1)
    double nu_double() const { return nd_; }  // ν″(1)

    int max_degree() const;
    bool is_pure() const { return terms_.size() == 1; } // α² = 0 exactly

    // Comma-separated p:weight text form, e.g. "2:0.9,10:0.1".
    std::string to_text() const;

private:
    explicit Mixture(std::vector<MixtureTerm> terms);
    std::vector<MixtureTerm> terms_;
    double np_ = 0.0, nd_ = 0.0;
};

// Parses the `p:weight,p:weight` text format with the same validation as
// Mixture::make. Syntax problems throw MixtureParseError; semantic problems
// (duplicate degree, bad weight, bad normalization) keep their own types.
Mixture parse_mixture(const std::string &text, bool normalize = false);

enum class MixtureClass { PureLike, Critical, FullMixture };

const char *to_string(MixtureClass c);

// Derivative statistics, the four energy thresholds, Σ_ν and the pure-like /
// critical / full classification of a mixture.
struct MixtureProfile {
    double nu_prime = 0.0;     // ν′
    double nu_double = 0.0;    // ν″
    double alpha2 = 0.0;       // α² = ν″ + ν′ − ν′²  (0 iff pure)
    double e_inf = 0.0;        // E_∞  = (ν″−ν′+ν′²)/(ν′√ν″)
    double e_inf_prime = 0.0;  // E′_∞ = 2ν′√ν″/(ν″+ν′)
    double e_inf_minus = 0.0;  // E_∞⁻ = E′_∞ − α√(2Σ_ν/(ν″+ν′))
    double e_inf_plus = 0.0;   // E_∞⁺ = E′_∞ + α√(2Σ_ν/(ν″+ν′))
    double sigma = 0.0;        // Σ_ν = ½log(ν″/ν′) − (ν″−ν′)/(ν″+ν′)
    double g_value = 0.0;      // G = log(ν″/ν′) − (ν″−ν′)(ν″−ν′+ν′²)/(ν″ν′²)
    MixtureClass cls = MixtureClass::Critical;
};

// Classification band on G: |G| ≤ this is Critical.
inline constexpr double kClassificationTolerance = 1e-12;

MixtureProfile profile(const Mixture &m);

// Σ_ν directly (the peak value of every k-complexity curve).
double sigma_total(const Mixture &m);

// For the family μt² + (1−μ)t^p: the weight μ_c(p) ∈ (0,1) where G changes
// sign (pure-like below, full mixture above). p = 3 has no such weight
// (pure-like for every μ) and throws NoCriticalWeight; p ≥ 4 required.
double mu_critical(int p);

} // namespace spinscape

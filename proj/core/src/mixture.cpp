#include "spinscape/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spinscape/errors.hpp"

namespace spinscape {

Mixture::Mixture(std::vector<MixtureTerm> terms) : terms_(std::move(terms)) {
    for (const auto &t : terms_) {
        np_ += t.weight * t.p;
        nd_ += t.weight * t.p * (t.p - 1);
    }
}

Mixture Mixture::make(std::vector<MixtureTerm> terms, bool normalize) {
    if (terms.empty())
        throw DomainError("mixture needs at least one term");
    std::sort(terms.begin(), terms.end(),
              [](const MixtureTerm &a, const MixtureTerm &b) { return a.p < b.p; });
    double sum = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].p < 2)
            throw DomainError("mixture degrees must be integers >= 2");
        if (!(terms[i].weight > 0.0))
            throw NonPositiveWeight("weight for degree " + std::to_string(terms[i].p));
        if (i > 0 && terms[i].p == terms[i - 1].p)
            throw DuplicateDegree("degree " + std::to_string(terms[i].p) + " appears twice");
        sum += terms[i].weight;
    }
    if (normalize) {
        for (auto &t : terms) t.weight /= sum;
    } else if (std::abs(sum - 1.0) > 1e-9) {
        throw NotNormalized("weights sum to " + std::to_string(sum));
    }
    return Mixture(std::move(terms));
}

double Mixture::nu(double t) const {
    double v = 0.0;
    for (const auto &term : terms_) v += term.weight * std::pow(t, term.p);
    return v;
}

int Mixture::max_degree() const { return terms_.back().p; }

std::string Mixture::to_text() const {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out << ',';
        out << terms_[i].p << ':' << terms_[i].weight;
    }
    return out.str();
}

Mixture parse_mixture(const std::string &text, bool normalize) {
    std::vector<MixtureTerm> terms;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t colon = item.find(':');
        if (item.empty() || colon == std::string::npos)
            throw MixtureParseError("expected p:weight, got '" + item + "'");
        try {
            std::size_t used = 0;
            const int p = std::stoi(item.substr(0, colon), &used);
            if (used != colon)
                throw MixtureParseError("bad degree in '" + item + "'");
            const std::string wtext = item.substr(colon + 1);
            const double w = std::stod(wtext, &used);
            if (used != wtext.size())
                throw MixtureParseError("bad weight in '" + item + "'");
            terms.push_back({p, w});
        } catch (const std::invalid_argument &) {
            throw MixtureParseError("cannot parse term '" + item + "'");
        } catch (const std::out_of_range &) {
            throw MixtureParseError("number out of range in '" + item + "'");
        }
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return Mixture::make(std::move(terms), normalize);
}

const char *to_string(MixtureClass c) {
    switch (c) {
        case MixtureClass::PureLike: return "PureLike";
        case MixtureClass::Critical: return "Critical";
        case MixtureClass::FullMixture: return "FullMixture";
    }
    return "?";
}

MixtureProfile profile(const Mixture &m) {
    MixtureProfile pr;
    const double np = m.nu_prime(), nd = m.nu_double();
    pr.nu_prime = np;
    pr.nu_double = nd;
    // A point-mass degree distribution (pure mixture) has exactly zero variance;
    // clamp the roundoff so downstream √α² is clean.
    pr.alpha2 = m.is_pure() ? 0.0 : std::max(0.0, nd + np - np * np);
    const double s2 = nd - np + np * np;
    pr.e_inf = s2 / (np * std::sqrt(nd));
    pr.e_inf_prime = 2.0 * np * std::sqrt(nd) / (nd + np);
    pr.sigma = 0.5 * std::log(nd / np) - (nd - np) / (nd + np);
    const double spread =
        std::sqrt(pr.alpha2) * std::sqrt(2.0 * std::max(0.0, pr.sigma) / (nd + np));
    pr.e_inf_minus = pr.e_inf_prime - spread;
    pr.e_inf_plus = pr.e_inf_prime + spread;
    pr.g_value = std::log(nd / np) - (nd - np) * s2 / (nd * np * np);
    if (std::abs(pr.g_value) <= kClassificationTolerance)
        pr.cls = MixtureClass::Critical;
    else
        pr.cls = pr.g_value > 0.0 ? MixtureClass::PureLike : MixtureClass::FullMixture;
    return pr;
}

double sigma_total(const Mixture &m) {
    const double np = m.nu_prime(), nd = m.nu_double();
    return 0.5 * std::log(nd / np) - (nd - np) / (nd + np);
}

namespace {
double family_g(int p, double mu) {
    const auto m = Mixture::make({{2, mu}, {p, 1.0 - mu}});
    return profile(m).g_value;
}
} // namespace

double mu_critical(int p) {
    if (p < 3)
        throw DomainError("mu_critical requires p >= 3");
    if (p == 3)
        throw NoCriticalWeight("mu*t^2 + (1-mu)*t^3 is pure-like for every mu");
    // G(0⁺) > 0 (pure p-spin is pure-like for p ≥ 3) and G(μ) < 0 near μ = 1,
    // so locate the sign change on a grid, then bisect.
    const int kGrid = 1024;
    double lo = -1.0, hi = -1.0;
    double prev_mu = 1e-9, prev_g = family_g(p, prev_mu);
    for (int i = 1; i <= kGrid; ++i) {
        const double mu = static_cast<double>(i) / (kGrid + 1);
        const double g = family_g(p, mu);
        if (prev_g > 0.0 && g <= 0.0) {
            lo = prev_mu;
            hi = mu;
            break;
        }
        prev_mu = mu;
        prev_g = g;
    }
    if (lo < 0.0)
        throw BracketFailure("no sign change of G for p = " + std::to_string(p));
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (family_g(p, mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace spinscape

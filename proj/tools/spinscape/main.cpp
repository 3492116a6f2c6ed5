#include "CLI11.hpp"
#include "json.hpp"

#include <spinscape/complexity.hpp>
#include <spinscape/errors.hpp>
#include <spinscape/euler.hpp>
#include <spinscape/goe.hpp>
#include <spinscape/mixture.hpp>
#include <spinscape/parallel.hpp>
#include <spinscape/parisi.hpp>
#include <spinscape/signed_log.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace spinscape;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char *kDefaultMixture = "2:0.5,4:0.5";

// shortest exact decimal form so output is byte-identical across runs
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct UsageFailure {
    std::string message;
};

// mixture problems at the command line are usage errors (exit 2), not
// computation errors
Mixture mixture_arg(const std::string &text) {
    try {
        return parse_mixture(text);
    } catch (const Error &e) {
        throw UsageFailure{e.what()};
    }
}

struct UGrid {
    double lo = 0.0, hi = 0.0;
    int steps = 0;

    static UGrid from_flag(const std::vector<double> &v) {
        UGrid g{v[0], v[1], static_cast<int>(v[2])};
        if (!(g.lo < g.hi)) throw UsageFailure{"--u requires LO < HI"};
        if (g.steps < 2 || v[2] != g.steps)
            throw UsageFailure{"--u requires an integer STEPS >= 2"};
        return g;
    }

    double at(int i) const { return lo + (hi - lo) * i / (steps - 1); }
};

void write_output(const std::string &path, const std::string &body) {
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageFailure{"cannot open output file " + path};
    f << body;
}

ordered_json profile_json(const MixtureProfile &p) {
    ordered_json j;
    j["nu_prime"] = p.nu_prime;
    j["nu_double"] = p.nu_double;
    j["alpha2"] = p.alpha2;
    j["e_inf"] = p.e_inf;
    j["e_inf_prime"] = p.e_inf_prime;
    j["e_inf_minus"] = p.e_inf_minus;
    j["e_inf_plus"] = p.e_inf_plus;
    j["sigma"] = p.sigma;
    j["g_value"] = p.g_value;
    j["class"] = to_string(p.cls);
    return j;
}

// two-column fallback so every subcommand honors --format csv
std::string report_csv(const ordered_json &j) {
    std::ostringstream out;
    out << "field,value\n";
    for (const auto &item : j.items()) {
        out << item.key() << ',';
        if (item.value().is_string())
            out << item.value().get<std::string>();
        else if (item.value().is_number_integer())
            out << item.value().get<long long>();
        else if (item.value().is_array())
            out << item.value().dump();
        else
            out << num(item.value().get<double>());
        out << '\n';
    }
    return out.str();
}

std::string render_report(const ordered_json &j, const std::string &format) {
    if (format == "csv") return report_csv(j);
    return j.dump(2) + "\n";
}

int run_profile(const std::string &mixture, const std::string &format,
                const std::string &out) {
    const Mixture m = mixture_arg(mixture);
    write_output(out, render_report(profile_json(profile(m)), format));
    return 0;
}

int run_complexity(const std::string &mixture, const std::vector<double> &u,
                   std::optional<int> k, std::optional<double> gamma,
                   const std::string &format, const std::string &out) {
    const Mixture m = mixture_arg(mixture);
    const UGrid g = UGrid::from_flag(u);
    CurveKind kind = CurveKind::total();
    if (k) kind = CurveKind::finite(*k);
    if (gamma) kind = CurveKind::diverging(*gamma);
    const ComplexityCurve curve = sample_curve(kind, g.lo, g.hi, g.steps, m);
    if (format == "json") {
        ordered_json pts = ordered_json::array();
        for (const CurvePoint &p : curve.points)
            pts.push_back({{"u", p.u},
                           {"theta", p.theta},
                           {"regime", to_string(p.regime)}});
        write_output(out, ordered_json{{"points", pts}}.dump(2) + "\n");
        return 0;
    }
    std::ostringstream body;
    body << "u,theta,regime\n";
    for (const CurvePoint &p : curve.points)
        body << num(p.u) << ',' << num(p.theta) << ',' << to_string(p.regime)
             << '\n';
    write_output(out, body.str());
    return 0;
}

int run_ek(const std::string &mixture, int k_max, const std::string &format,
           const std::string &out) {
    const Mixture m = mixture_arg(mixture);
    if (k_max < 0) throw UsageFailure{"--k must be >= 0"};
    std::vector<double> ek(k_max + 1);
    for (int k = 0; k <= k_max; ++k) ek[k] = layer_energy(k, m);
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (int k = 0; k <= k_max; ++k)
            rows.push_back({{"k", k}, {"E_k", ek[k]}});
        write_output(out, ordered_json{{"layers", rows}}.dump(2) + "\n");
        return 0;
    }
    std::ostringstream body;
    body << "k,E_k\n";
    for (int k = 0; k <= k_max; ++k) body << k << ',' << num(ek[k]) << '\n';
    write_output(out, body.str());
    return 0;
}

int run_parisi(const std::string &mixture, const std::string &format,
               const std::string &out) {
    const Mixture m = mixture_arg(mixture);
    const F1Report r = compare_f1_E0(m);
    ordered_json j;
    j["nu_prime"] = r.nu_prime;
    j["nu_double"] = r.nu_double;
    j["class"] = to_string(r.cls);
    j["f1"] = r.f1;
    j["E0"] = r.e0;
    j["gap"] = r.gap;
    j["verdict"] = to_string(r.verdict);
    write_output(out, render_report(j, format));
    return 0;
}

int run_duality(const std::string &mixture, const std::vector<double> &u,
                const std::string &format, const std::string &out) {
    const Mixture m = mixture_arg(mixture);
    const UGrid g = UGrid::from_flag(u);
    std::vector<DualityPoint> pts(g.steps);
    parallel_for(g.steps,
                 [&](std::size_t i) { pts[i] = duality_point(g.at(int(i)), m); });
    double max_residual = 0.0;
    for (const DualityPoint &p : pts)
        max_residual = std::max(max_residual, p.residual);
    if (format == "csv") {
        std::ostringstream body;
        body << "u,theta0,legendre,minimizer,residual\n";
        for (const DualityPoint &p : pts)
            body << num(p.u) << ',' << num(p.theta0) << ',' << num(p.legendre)
                 << ',' << num(p.minimizer) << ',' << num(p.residual) << '\n';
        write_output(out, body.str());
        return 0;
    }
    ordered_json rows = ordered_json::array();
    for (const DualityPoint &p : pts)
        rows.push_back({{"u", p.u},
                        {"theta0", p.theta0},
                        {"legendre", p.legendre},
                        {"minimizer", p.minimizer},
                        {"residual", p.residual}});
    ordered_json j{{"points", rows}, {"max_residual", max_residual}};
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int run_goe_validate(const std::string &mixture, int n, int k,
                     const std::vector<double> &band, int samples,
                     std::uint64_t seed, const std::string &format,
                     const std::string &out) {
    const Mixture m = mixture_arg(mixture);
    if (samples < 1) throw UsageFailure{"--samples must be >= 1"};
    if (band.size() != 2 || !(band[0] < band[1]))
        throw UsageFailure{"--u requires LO < HI"};
    const RiceEstimate est =
        crt_mean_identity(n, k, band[0], band[1], m, samples, seed);
    ordered_json j;
    j["n"] = est.n;
    j["k"] = est.k;
    j["band"] = {est.band_lo, est.band_hi};
    j["mean_log"] = est.mean.log_abs;
    j["sign"] = est.mean.sign;
    j["stderr_rel"] = est.stderr_rel;
    j["samples"] = est.samples;
    j["seed"] = seed;
    if (n == 2 && k <= 1) {
        // cross-check against the brute-force circle count; identical seeds
        // reuse the same draws, so the band difference is itself a mean
        const DirectCounts hi = direct_count_full(2, m, band[1], samples, seed);
        const DirectCounts lo = direct_count_full(2, m, band[0], samples, seed);
        const RiceEstimate &h = (k == 0) ? hi.minima : hi.maxima;
        const RiceEstimate &l = (k == 0) ? lo.minima : lo.maxima;
        const double direct = h.mean.to_real() - l.mean.to_real();
        const double se_direct = std::hypot(h.mean.to_real() * h.stderr_rel,
                                            l.mean.to_real() * l.stderr_rel);
        const double se_ident =
            std::abs(est.mean.to_real()) * est.stderr_rel;
        const double se = std::hypot(se_direct, se_ident);
        j["direct_mean"] = direct;
        j["z_score"] = se > 0.0 ? (est.mean.to_real() - direct) / se : 0.0;
    }
    write_output(out, render_report(j, format));
    return 0;
}

int run_euler(const std::string &mixture, int n, const std::vector<double> &u,
              const std::string &format, const std::string &out) {
    const Mixture m = mixture_arg(mixture);
    const UGrid g = UGrid::from_flag(u);
    std::vector<SignedLog> exact(g.steps);
    std::vector<std::optional<EulerAsymptotic>> asym(g.steps);
    parallel_for(g.steps, [&](std::size_t i) {
        const double uu = g.at(int(i));
        exact[i] = euler_exact(n, uu, m);
        try {
            asym[i] = euler_asymptotic(n, uu, m);
        } catch (const EdgeWindow &) {
            // no asymptotic row where the window parametrization degenerates
        }
    });
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < g.steps; ++i) {
            ordered_json r{{"u", g.at(i)},
                           {"mode", "exact"},
                           {"sign", exact[i].sign},
                           {"log_abs", exact[i].log_abs}};
            rows.push_back(r);
            if (!asym[i]) continue;
            ordered_json a{{"u", g.at(i)},
                           {"mode", "asymptotic"},
                           {"sign", asym[i]->value.sign},
                           {"log_abs", asym[i]->value.log_abs},
                           {"part", asym[i]->part}};
            if (asym[i]->part == 2 && asym[i]->descriptor) {
                const OscillationDescriptor &d = *asym[i]->descriptor;
                a["descriptor"] = ordered_json{{"omega", d.omega},
                                               {"tau", d.tau},
                                               {"rho", d.rho},
                                               {"amp", d.amp},
                                               {"alpha_phase", d.alpha_phase}};
            }
            rows.push_back(a);
        }
        write_output(out, ordered_json{{"points", rows}}.dump(2) + "\n");
        return 0;
    }
    std::ostringstream body;
    body << "u,sign,log_abs,mode\n";
    for (int i = 0; i < g.steps; ++i) {
        body << num(g.at(i)) << ',' << exact[i].sign << ','
             << num(exact[i].log_abs) << ",exact\n";
        if (asym[i])
            body << num(g.at(i)) << ',' << asym[i]->value.sign << ','
                 << num(asym[i]->value.log_abs) << ",asymptotic\n";
    }
    write_output(out, body.str());
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"mixed spherical spin-glass landscape toolkit"};
    app.require_subcommand(1);

    std::string mixture = kDefaultMixture;
    std::string format;
    std::string out;
    std::vector<double> u_flag;
    std::vector<double> band_flag{-1.0, -0.5};
    int k_curve = 0;
    double gamma_curve = 0.0;
    int k_plain = 0;
    int n = 2;
    int samples = 10000;
    std::uint64_t seed = 1;

    const auto add_common = [&](CLI::App *sub, const char *default_format) {
        format = "";
        sub->add_option("--mixture", mixture,
                        "comma-separated p:weight pairs, e.g. 2:0.9,10:0.1")
            ->capture_default_str();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->default_str(default_format);
        sub->add_option("--out", out, "write to this file instead of stdout");
        sub->parse_complete_callback([&format, default_format] {
            if (format.empty()) format = default_format;
        });
    };

    CLI::App *profile_cmd = app.add_subcommand(
        "profile", "derivative statistics, thresholds and classification");
    add_common(profile_cmd, "json");

    CLI::App *complexity_cmd = app.add_subcommand(
        "complexity", "complexity curve over an energy grid");
    add_common(complexity_cmd, "csv");
    complexity_cmd->add_option("--u", u_flag, "grid LO HI STEPS")
        ->expected(3)
        ->required();
    CLI::Option *k_o = complexity_cmd->add_option(
        "--k", k_curve, "fixed critical-point index");
    CLI::Option *gamma_o =
        complexity_cmd
            ->add_option("--gamma", gamma_curve, "index fraction in (0,1)")
            ->excludes(k_o);

    CLI::App *ek_cmd =
        app.add_subcommand("ek", "layer energies E_k for k = 0..K");
    add_common(ek_cmd, "csv");
    ek_cmd->add_option("--k", k_plain, "largest index K")->required();

    CLI::App *parisi_cmd = app.add_subcommand(
        "parisi", "ground-state functional versus the lowest layer energy");
    add_common(parisi_cmd, "json");

    CLI::App *duality_cmd = app.add_subcommand(
        "duality", "Legendre duality residuals over an energy grid");
    add_common(duality_cmd, "json");
    duality_cmd->add_option("--u", u_flag, "grid LO HI STEPS")
        ->expected(3)
        ->required();

    CLI::App *goe_cmd = app.add_subcommand(
        "goe-validate", "Monte Carlo mean critical-point count in a band");
    add_common(goe_cmd, "json");
    goe_cmd->add_option("--n", n, "dimension")->required();
    goe_cmd->add_option("--k", k_plain, "critical-point index");
    goe_cmd->add_option("--u", band_flag, "band LO HI")->expected(2);
    goe_cmd->add_option("--samples", samples, "Monte Carlo draws");
    goe_cmd->add_option("--seed", seed, "base RNG seed");

    CLI::App *euler_cmd = app.add_subcommand(
        "euler", "mean Euler characteristic of sublevel sets, exact and "
                 "asymptotic");
    add_common(euler_cmd, "csv");
    euler_cmd->add_option("--n", n, "dimension")->required();
    euler_cmd->add_option("--u", u_flag, "grid LO HI STEPS")
        ->expected(3)
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*profile_cmd) return run_profile(mixture, format, out);
        if (*complexity_cmd) {
            std::optional<int> k_opt;
            std::optional<double> gamma_opt;
            if (k_o->count() > 0) k_opt = k_curve;
            if (gamma_o->count() > 0) gamma_opt = gamma_curve;
            return run_complexity(mixture, u_flag, k_opt, gamma_opt, format,
                                  out);
        }
        if (*ek_cmd) return run_ek(mixture, k_plain, format, out);
        if (*parisi_cmd) return run_parisi(mixture, format, out);
        if (*duality_cmd) return run_duality(mixture, u_flag, format, out);
        if (*goe_cmd)
            return run_goe_validate(mixture, n, k_plain, band_flag, samples,
                                    seed, format, out);
        if (*euler_cmd) return run_euler(mixture, n, u_flag, format, out);
    } catch (const UsageFailure &uf) {
        std::cerr << uf.message << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << e.name() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}

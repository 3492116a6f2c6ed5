#include <spinscape/goe.hpp>

#include <spinscape/errors.hpp>
#include <spinscape/parallel.hpp>
#include <spinscape/rng.hpp>
#include <spinscape/special.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <vector>

namespace spinscape {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.141592653589793;
constexpr double kTwoPi = 2.0 * kPi;

double log_sum_exp_shifted(const std::vector<double> &logs) {
    double hi = -kInf;
    for (double v : logs) hi = std::max(hi, v);
    if (hi == -kInf) return -kInf;
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - hi);
    return hi + std::log(acc);
}

struct IdentityKernel {
    double n = 0.0;
    double np = 0.0, nd = 0.0, a2 = 0.0;
    double center_slope = 0.0; // ν′√(2ν″)/(ν″+ν′)
    double sd = 0.0;           // √(α²/(n(ν″+ν′)))
    double curvature = 0.0;    // n(ν″−ν′)/(2(ν″+ν′))
    double log_gauss_mass = 0.0;

    IdentityKernel(int n_, const Mixture &mix) {
        n = static_cast<double>(n_);
        np = mix.nu_prime();
        nd = mix.nu_double();
        a2 = nd + np - np * np;
        center_slope = np * std::sqrt(2.0 * nd) / (nd + np);
        sd = std::sqrt(a2 / (n * (nd + np)));
        curvature = n * (nd - np) / (2.0 * (nd + np));
        log_gauss_mass = 0.5 * std::log(kTwoPi * a2 / (n * (nd + np)));
    }

    // log of the closed-form y-integral over (lo, hi] for one eigenvalue
    double band_log(double lam, double lo, double hi) const {
        const double y0 = center_slope * lam;
        const double zlo = lo == -kInf ? -kInf : (lo - y0) / sd;
        const double zhi = hi == kInf ? kInf : (hi - y0) / sd;
        return -curvature * lam * lam + log_gauss_mass +
               log_normal_cdf_diff(zlo, zhi);
    }

    // C(n,ν) = 2√(nν′/(πα²)) (ν″/ν′)^{n/2}
    double log_prefactor() const {
        return std::log(2.0) + 0.5 * std::log(n * np / (kPi * a2)) +
               0.5 * n * std::log(nd / np);
    }
};

RiceEstimate reduce_log_samples(const std::vector<double> &logs,
                                double log_prefactor, int n, int k, double lo,
                                double hi) {
    const int samples = static_cast<int>(logs.size());
    const double log_n = std::log(static_cast<double>(samples));
    const double log_m1 = log_sum_exp_shifted(logs) - log_n;

    std::vector<double> doubled(logs.size());
    for (std::size_t i = 0; i < logs.size(); ++i) doubled[i] = 2.0 * logs[i];
    const double log_m2 = log_sum_exp_shifted(doubled) - log_n;

    RiceEstimate est;
    est.samples = samples;
    est.n = n;
    est.k = k;
    est.band_lo = lo;
    est.band_hi = hi;
    if (log_m1 == -kInf) {
        est.mean = SignedLog::zero();
        est.stderr_rel = 0.0;
        return est;
    }
    est.mean = SignedLog::from_log(1, log_m1 + log_prefactor);
    const double rel_var = std::expm1(log_m2 - 2.0 * log_m1);
    est.stderr_rel = std::sqrt(std::max(0.0, rel_var) / samples);
    return est;
}

void validate_identity_args(int n, double lo, double hi, const Mixture &mix,
                            int samples) {
    if (n < 1) throw DomainError("matrix size must be at least 1");
    if (samples < 1) throw DomainError("need at least one sample");
    if (!(lo < hi)) throw DomainError("band must satisfy lo < hi");
    if (mix.is_pure())
        throw PureMixture("the identity degenerates when α² = 0");
}

} // namespace

SpectralSample sample_goe(int n, std::uint64_t seed) {
    if (n < 1) throw DomainError("matrix size must be at least 1");
    GaussianRng rng(seed);
    Eigen::MatrixXd m(n, n);
    const double diag_sd = std::sqrt(1.0 / n);
    const double off_sd = std::sqrt(1.0 / (2.0 * n));
    for (int i = 0; i < n; ++i) {
        m(i, i) = diag_sd * rng.gaussian();
        for (int j = i + 1; j < n; ++j) {
            const double v = off_sd * rng.gaussian();
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m,
                                                          Eigen::EigenvaluesOnly);
    SpectralSample out;
    out.n = n;
    out.seed = seed;
    out.eigenvalues.assign(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + n);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

RiceEstimate crt_mean_identity(int n, int k, double band_lo, double band_hi,
                               const Mixture &mix, int samples,
                               std::uint64_t seed) {
    validate_identity_args(n, band_lo, band_hi, mix, samples);
    if (k < 0 || k >= n) throw DomainError("index k must lie in [0, n)");

    const IdentityKernel kernel(n, mix);
    std::vector<double> logs(samples);
    parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
        const SpectralSample s = sample_goe(n, derive_seed(seed, i));
        logs[i] = kernel.band_log(s.eigenvalues[k], band_lo, band_hi);
    });
    return reduce_log_samples(logs, kernel.log_prefactor(), n, k, band_lo,
                              band_hi);
}

RiceEstimate crt_mean_total(int n, double band_lo, double band_hi,
                            const Mixture &mix, int samples,
                            std::uint64_t seed) {
    validate_identity_args(n, band_lo, band_hi, mix, samples);

    const IdentityKernel kernel(n, mix);
    std::vector<double> logs(samples);
    parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
        const SpectralSample s = sample_goe(n, derive_seed(seed, i));
        double acc = -kInf;
        for (int k = 0; k < n; ++k)
            acc = log_sum_exp(acc,
                              kernel.band_log(s.eigenvalues[k], band_lo, band_hi));
        logs[i] = acc;
    });
    return reduce_log_samples(logs, kernel.log_prefactor(), n, -1, band_lo,
                              band_hi);
}

namespace {

// H restricted to the circle: Σ terms coef·cos^a θ sin^b θ with the Gaussian
// coefficients folded into coef. Highest power tracked for the shared tables.
struct CircleField {
    struct Term {
        double coef;
        int a, b;
    };
    std::vector<Term> terms;
    int pmax = 0;

    static CircleField draw(const Mixture &mix, GaussianRng &rng) {
        CircleField f;
        for (const MixtureTerm &t : mix.terms()) {
            const double beta = std::sqrt(t.weight);
            double binom = 1.0; // C(p, m) built up multiplicatively
            for (int m = 0; m <= t.p; ++m) {
                const double coef =
                    std::sqrt(2.0) * beta * std::sqrt(binom) * rng.gaussian();
                f.terms.push_back({coef, t.p - m, m});
                binom = binom * (t.p - m) / (m + 1.0);
            }
            f.pmax = std::max(f.pmax, t.p);
        }
        return f;
    }

    void powers(double c, double s, double *pc, double *ps) const {
        pc[0] = 1.0;
        ps[0] = 1.0;
        for (int i = 1; i <= pmax + 1; ++i) {
            pc[i] = pc[i - 1] * c;
            ps[i] = ps[i - 1] * s;
        }
    }

    double value(double theta) const {
        double pc[16], ps[16];
        powers(std::cos(theta), std::sin(theta), pc, ps);
        double acc = 0.0;
        for (const Term &t : terms) acc += t.coef * pc[t.a] * ps[t.b];
        return acc;
    }

    // dH/dθ via d(cos^a sin^b) = −a cos^{a−1} sin^{b+1} + b cos^{a+1} sin^{b−1}
    double deriv_from_powers(const double *pc, const double *ps) const {
        double acc = 0.0;
        for (const Term &t : terms) {
            double d = 0.0;
            if (t.a > 0) d -= t.a * pc[t.a - 1] * ps[t.b + 1];
            if (t.b > 0) d += t.b * pc[t.a + 1] * ps[t.b - 1];
            acc += t.coef * d;
        }
        return acc;
    }

    double deriv(double theta) const {
        double pc[16], ps[16];
        powers(std::cos(theta), std::sin(theta), pc, ps);
        return deriv_from_powers(pc, ps);
    }
};

// Shared cos/sin tables for the three fixed grid sizes, built once and read
// concurrently afterwards.
struct GridTables {
    std::vector<double> cos_v, sin_v;
};

const GridTables &grid_table(int grid) {
    static std::mutex m;
    static std::vector<std::pair<int, std::unique_ptr<GridTables>>> cache;
    std::lock_guard<std::mutex> lock(m);
    for (auto &entry : cache)
        if (entry.first == grid) return *entry.second;
    auto tables = std::make_unique<GridTables>();
    tables->cos_v.resize(grid);
    tables->sin_v.resize(grid);
    for (int j = 0; j < grid; ++j) {
        const double th = kTwoPi * j / grid;
        tables->cos_v[j] = std::cos(th);
        tables->sin_v[j] = std::sin(th);
    }
    cache.emplace_back(grid, std::move(tables));
    return *cache.back().second;
}

bool alternates(const std::vector<bool> &is_min) {
    const std::size_t n = is_min.size();
    if (n < 2 || n % 2 != 0) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (is_min[i] == is_min[(i + 1) % n]) return false;
    return true;
}

bool solve_circle(const CircleField &f, int grid, CircleCriticalPoints &out) {
    const GridTables &tab = grid_table(grid);

    std::vector<double> dh(grid);
    for (int j = 0; j < grid; ++j) {
        double pc[16], ps[16];
        f.powers(tab.cos_v[j], tab.sin_v[j], pc, ps);
        dh[j] = f.deriv_from_powers(pc, ps);
    }

    out.theta.clear();
    out.value.clear();
    out.is_min.clear();
    const double step = kTwoPi / grid;
    for (int j = 0; j < grid; ++j) {
        const double va = dh[j];
        const double vb = dh[(j + 1) % grid];
        if (!(va * vb < 0.0)) continue;
        double lo = step * j, hi = step * (j + 1);
        double flo = va;
        while (hi - lo > 1e-11) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f.deriv(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        const double root = 0.5 * (lo + hi);
        const double d2 =
            f.value(root + step) + f.value(root - step) - 2.0 * f.value(root);
        out.theta.push_back(root);
        out.value.push_back(f.value(root) / 2.0);
        out.is_min.push_back(d2 > 0.0);
    }
    return alternates(out.is_min);
}

CircleCriticalPoints solve_circle_retrying(const CircleField &f) {
    CircleCriticalPoints pts;
    for (int grid : {4096, 16384, 65536})
        if (solve_circle(f, grid, pts)) return pts;
    throw BracketFailure(
        "critical points on the circle did not stabilize under refinement");
}

// Arcs of {H/n ≤ level}: maximal circular runs of critical points at or below
// the level. Matches (#min ≤ level) − (#max ≤ level) except when the sublevel
// set is the whole circle, whose Euler characteristic is 0.
bool euler_consistent(const CircleCriticalPoints &pts, double level) {
    int min_le = 0, max_le = 0;
    for (std::size_t i = 0; i < pts.theta.size(); ++i)
        if (pts.value[i] <= level) (pts.is_min[i] ? min_le : max_le)++;
    const int alternating = min_le - max_le;

    const std::size_t n = pts.theta.size();
    if (min_le + max_le == static_cast<int>(n)) return alternating == 0;
    int runs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool below = pts.value[i] <= level;
        const bool prev_below = pts.value[(i + n - 1) % n] <= level;
        if (below && !prev_below) ++runs;
    }
    return runs == alternating;
}

RiceEstimate direct_reduce(const std::vector<double> &counts, int k,
                           double level) {
    const int samples = static_cast<int>(counts.size());
    double mean = 0.0;
    for (double c : counts) mean += c;
    mean /= samples;
    double var = 0.0;
    for (double c : counts) var += (c - mean) * (c - mean);
    var /= std::max(1, samples - 1);

    RiceEstimate est;
    est.mean = SignedLog::from_real(mean);
    est.stderr_rel = mean > 0.0 ? std::sqrt(var / samples) / mean : 0.0;
    est.samples = samples;
    est.n = 2;
    est.k = k;
    est.band_lo = -kInf;
    est.band_hi = level;
    return est;
}

void validate_direct_args(int n, const Mixture &mix) {
    if (n != 2)
        throw UnsupportedDimension("direct counting is implemented for n = 2");
    if (mix.max_degree() > 12)
        throw DomainError("direct counting supports degrees up to 12");
}

} // namespace

CircleCriticalPoints direct_critical_points(int n, const Mixture &mix,
                                            std::uint64_t seed) {
    validate_direct_args(n, mix);
    GaussianRng rng(seed);
    return solve_circle_retrying(CircleField::draw(mix, rng));
}

DirectCounts direct_count_full(int n, const Mixture &mix, double level,
                               int samples, std::uint64_t seed) {
    validate_direct_args(n, mix);
    if (samples < 1) throw DomainError("need at least one sample");

    std::vector<double> mins(samples), maxs(samples);
    parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
        GaussianRng rng(derive_seed(seed, i));
        const CircleCriticalPoints pts =
            solve_circle_retrying(CircleField::draw(mix, rng));
        if (!euler_consistent(pts, level))
            throw BracketFailure("sublevel arcs disagree with the index counts");
        int min_le = 0, max_le = 0;
        for (std::size_t j = 0; j < pts.theta.size(); ++j)
            if (pts.value[j] <= level) (pts.is_min[j] ? min_le : max_le)++;
        mins[i] = min_le;
        maxs[i] = max_le;
    });

    std::vector<double> totals(samples);
    for (int i = 0; i < samples; ++i) totals[i] = mins[i] + maxs[i];
    DirectCounts out;
    out.minima = direct_reduce(mins, 0, level);
    out.maxima = direct_reduce(maxs, 1, level);
    out.total = direct_reduce(totals, -1, level);
    return out;
}

RiceEstimate direct_count(int n, const Mixture &mix, double level, int samples,
                          std::uint64_t seed) {
    return direct_count_full(n, mix, level, samples, seed).minima;
}

} // namespace spinscape

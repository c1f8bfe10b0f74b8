#include "fbp/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fbp/besov.hpp"
#include "fbp/filters.hpp"
#include "fbp/io.hpp"
#include "fbp/phantom.hpp"
#include "fbp/pipeline.hpp"
#include "fbp/quadrature.hpp"

namespace fbp::report {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Reference values for the radial kernel constant c_{alpha,K}, smooth
// window, alpha = 1/4 .. 2 in steps of 1/4.
constexpr double kTableNu5[8] = {1.4273, 2.0329, 2.9484,  4.3460,
                                 6.5018, 9.8643, 15.1708, 23.6530};
constexpr double kTableNu7[8] = {1.4538, 2.1409, 3.2078,  4.8797,
                                 7.5234, 11.7401, 18.5234, 29.5256};

constexpr double kL1NormNu5 = 0.2976;
constexpr double kL1NormNu7 = 0.2541;

struct ProfileParams {
    std::vector<int> k_list;
    int fit_from_k = 0;
    int approx_side = 256;
    int data_side = 128;
    int data_trials = 2;
    int total_points = 5;
    int total_trials = 1;
    int total_side = 128;
    double total_delta0 = 0.02;
    int seminorm_grid = 128;
    int seminorm_tpoints = 16;
};

ProfileParams params_for(Profile profile) {
    switch (profile) {
        case Profile::Quick:
            return {{4, 6, 8, 12}, 6, 128, 96, 2, 5, 1, 96, 0.02, 96, 12};
        case Profile::Desk:
            return {{8, 12, 16, 24, 32, 48, 64}, 12, 512,  256, 5,
                    8, 3, 256, 0.02, 256, 32};
        case Profile::Full:
            return {{8, 12, 16, 24, 32, 48, 64, 100}, 12, 1024, 512, 5,
                    8, 5, 512, 0.02, 512, 48};
    }
    throw std::logic_error("unknown profile");
}

std::string fmt(double v) { return io::format_double(v); }

CriterionResult make_result(int id, std::string name, bool pass,
                            std::string detail) {
    return CriterionResult{id, std::move(name), pass, std::move(detail)};
}

double stability_bound(double p, double l1_norm, double L, double delta) {
    // Error norms are taken over the closed unit disk, diam = 2.
    const double diam = 2.0;
    if (p == kInf) return 0.5 * l1_norm * L * delta;
    return 0.5 * std::pow(kPi, -1.0 / p) * std::pow(diam, 1.0 / p) * l1_norm *
           L * delta;
}

const SlopeFit& slope_at(const SweepResult& sweep, int nu, double p) {
    const auto it = sweep.slopes.find(SeriesKey{nu, p});
    if (it == sweep.slopes.end())
        throw std::logic_error("missing slope series");
    return it->second;
}

const ExperimentRecord* find_record(const SweepResult& sweep, int nu, double p,
                                    int k) {
    for (const ExperimentRecord& r : sweep.records)
        if (r.nu == nu && r.p == p && r.k == k) return &r;
    return nullptr;
}

}  // namespace

Profile parse_profile(const std::string& s) {
    if (s == "quick") return Profile::Quick;
    if (s == "desk") return Profile::Desk;
    if (s == "full") return Profile::Full;
    throw std::invalid_argument("unknown profile: " + s +
                                " (expected quick|desk|full)");
}

SweepCache run_sweeps(const Options& opts) {
    const ProfileParams pp = params_for(opts.profile);
    SweepCache cache;

    SweepConfig approx;
    approx.k_list = pp.k_list;
    approx.fit_from_k = pp.fit_from_k;
    approx.side = pp.approx_side;
    approx.interp = Interp::Linear;

    // Linear interpolation suffices for the low-regularity Shepp-Logan
    // phantom; the smooth phantoms use cubic splines to exploit their
    // higher regularity.
    approx.nu_list = {5, 7};
    approx.p_list = {1.0, 2.0};
    cache.approx["shepp"] =
        sweep_approximation(shepp_logan_desk_phantom(), approx);
    approx.interp = Interp::CubicSpline;
    cache.approx["smooth1"] = sweep_approximation(smooth_phantom(1.0), approx);

    approx.nu_list = {5};
    approx.p_list = {1.0, 4.0};
    cache.approx["smooth2"] = sweep_approximation(smooth_phantom(2.0), approx);

    SweepConfig data;
    data.k_list = pp.k_list;
    data.fit_from_k = pp.fit_from_k;
    data.side = pp.data_side;
    data.interp = Interp::Linear;
    data.nu_list = {5, 7};
    data.p_list = {1.0, 2.0, 4.0};
    NoiseSpec noise;
    noise.relative_level = 0.1;
    noise.seed = opts.seed;
    cache.data = sweep_data_error(shepp_logan_desk_phantom(), data, noise,
                                  pp.data_trials);

    const Phantom smooth1 = smooth_phantom(1.0);
    BesovOptions bopts;
    bopts.modulus.grid_side = pp.seminorm_grid;
    bopts.t_points = pp.seminorm_tpoints;
    cache.besov_seminorm =
        besov_seminorm(smooth1, 1.5, 2.0, 2.0, bopts).value;

    std::vector<double> deltas;
    for (int i = 0; i < pp.total_points; ++i)
        deltas.push_back(pp.total_delta0 * std::pow(0.5, i));
    cache.total = sweep_total_error(smooth1, 1.5, cache.besov_seminorm, deltas,
                                    2.0, 5, noise, pp.total_trials,
                                    pp.total_side, Interp::Linear);
    return cache;
}

CriterionResult check_table_constants() {
    double worst = 0.0;
    std::string worst_at;
    for (int col = 0; col < 8; ++col) {
        const double alpha = 0.25 * (col + 1);
        for (int nu : {5, 7}) {
            const double expected = (nu == 5) ? kTableNu5[col] : kTableNu7[col];
            const AlphaConstant c = kernel_alpha_constant(nu, alpha);
            if (c.divergent)
                return make_result(1, "kernel constants table", false,
                                   "unexpected divergence at nu=" +
                                       std::to_string(nu) +
                                       " alpha=" + fmt(alpha));
            const double rel = std::abs(c.value - expected) / expected;
            if (rel > worst) {
                worst = rel;
                worst_at = "nu=" + std::to_string(nu) + " alpha=" + fmt(alpha);
            }
        }
    }
    return make_result(1, "kernel constants table", worst <= 0.01,
                       "max rel dev " + fmt(worst) + " at " + worst_at +
                           " (tol 0.01)");
}

CriterionResult check_filter_l1_norms() {
    const double v5 =
        l1_norm_inv_fourier(Filter{Window::smooth(5), 1.0}).value;
    const double v7 =
        l1_norm_inv_fourier(Filter{Window::smooth(7), 1.0}).value;
    const double d5 = std::abs(v5 - kL1NormNu5);
    const double d7 = std::abs(v7 - kL1NormNu7);
    return make_result(2, "filter L1 norms", d5 <= 2e-3 && d7 <= 2e-3,
                       "nu=5: " + fmt(v5) + " (ref " + fmt(kL1NormNu5) +
                           "), nu=7: " + fmt(v7) + " (ref " + fmt(kL1NormNu7) +
                           "), tol 2e-3");
}

CriterionResult check_finiteness_frontier() {
    const int nus[6] = {1, 2, 3, 4, 5, 7};
    const double alphas[8] = {0.25, 0.75, 1.25, 1.4, 1.5, 1.6, 1.75, 2.0};
    for (int nu : nus) {
        for (double alpha : alphas) {
            const bool expect_divergent = (nu <= alpha + 0.5);
            const AlphaConstant c = kernel_alpha_constant(nu, alpha);
            if (c.divergent != expect_divergent)
                return make_result(
                    3, "finiteness frontier", false,
                    "nu=" + std::to_string(nu) + " alpha=" + fmt(alpha) +
                        " reported " +
                        (c.divergent ? "divergent" : "finite") +
                        ", expected the opposite");
        }
    }
    return make_result(3, "finiteness frontier", true,
                       "48 grid points, divergent iff nu <= alpha + 1/2");
}

CriterionResult check_moment_conditions() {
    // Normalize against the mass of |K| so thresholds are scale-free.
    const double scale = kernel_alpha_constant(5, 0.0).divergent
                             ? 1.0
                             : kernel_alpha_constant(5, 0.0).value;
    const double m10 = std::abs(kernel_moment(5, 1, 0)) / scale;
    const double m01 = std::abs(kernel_moment(5, 0, 1)) / scale;
    const double m20 = std::abs(kernel_moment(5, 2, 0)) / scale;
    const double m02 = std::abs(kernel_moment(5, 0, 2)) / scale;
    const bool pass = m10 < 1e-8 && m01 < 1e-8 && m20 > 1e-3 && m02 > 1e-3;
    return make_result(4, "kernel moment conditions", pass,
                       "|j|=1 moments " + fmt(m10) + ", " + fmt(m01) +
                           " (tol 1e-8); |j|=2 moments " + fmt(m20) + ", " +
                           fmt(m02) + " (must exceed 1e-3)");
}

CriterionResult check_approximation_slopes(const SweepCache& cache,
                                           const Options&) {
    struct Expect {
        const char* key;
        double p;
        double expected;
        double tol;
    };
    const Expect expectations[] = {
        {"shepp", 1.0, -1.0, 0.15},   {"shepp", 2.0, -0.5, 0.15},
        {"smooth1", 1.0, -2.0, 0.2},  {"smooth1", 2.0, -1.5, 0.2},
        {"smooth2", 1.0, -2.0, 0.25}, {"smooth2", 4.0, -2.0, 0.25},
    };
    bool pass = true;
    std::ostringstream detail;
    for (const Expect& e : expectations) {
        const double slope = slope_at(cache.approx.at(e.key), 5, e.p).slope;
        const bool ok = std::abs(slope - e.expected) <= e.tol;
        pass = pass && ok;
        detail << e.key << " p=" << fmt(e.p) << ": " << fmt(slope)
               << " (expect " << fmt(e.expected) << " +/- " << fmt(e.tol)
               << (ok ? ") " : ") FAIL ");
    }
    return make_result(5, "approximation-rate slopes", pass, detail.str());
}

CriterionResult check_filter_order(const SweepCache& cache) {
    for (const char* key : {"shepp", "smooth1"}) {
        const SweepResult& sweep = cache.approx.at(key);
        for (const ExperimentRecord& r : sweep.records) {
            if (r.nu != 5) continue;
            const ExperimentRecord* other = find_record(sweep, 7, r.p, r.k);
            if (other == nullptr)
                return make_result(6, "filter-order ordering", false,
                                   "missing nu=7 counterpart");
            if (!(r.error < other->error))
                return make_result(
                    6, "filter-order ordering", false,
                    std::string(key) + " p=" + fmt(r.p) +
                        " k=" + std::to_string(r.k) + ": nu=5 error " +
                        fmt(r.error) + " not below nu=7 error " +
                        fmt(other->error));
        }
    }
    return make_result(6, "filter-order ordering", true,
                       "nu=5 error < nu=7 error at every sweep point");
}

CriterionResult check_data_error(const SweepCache& cache) {
    const double slope = slope_at(cache.data, 5, 2.0).slope;
    const bool slope_ok = std::abs(slope - 0.5) <= 0.15;

    const double l1_5 =
        l1_norm_inv_fourier(Filter{Window::smooth(5), 1.0}).value;
    const double l1_7 =
        l1_norm_inv_fourier(Filter{Window::smooth(7), 1.0}).value;
    double worst_margin = kInf;
    for (const ExperimentRecord& r : cache.data.records) {
        const double l1 = (r.nu == 5) ? l1_5 : l1_7;
        const double bound = 1.1 * stability_bound(r.p, l1, r.L, r.delta);
        worst_margin = std::min(worst_margin, bound / r.error);
        if (r.error > bound)
            return make_result(7, "data-error slope and bound", false,
                               "bound violated at nu=" + std::to_string(r.nu) +
                                   " p=" + fmt(r.p) +
                                   " k=" + std::to_string(r.k));
    }
    return make_result(7, "data-error slope and bound", slope_ok,
                       "slope p=2 nu=5: " + fmt(slope) +
                           " (expect 0.5 +/- 0.15); bound margin >= " +
                           fmt(worst_margin));
}

CriterionResult check_data_order(const SweepCache& cache) {
    for (const ExperimentRecord& r : cache.data.records) {
        if (r.nu != 5 || r.p != 2.0) continue;
        const ExperimentRecord* other = find_record(cache.data, 7, 2.0, r.k);
        if (other == nullptr)
            return make_result(8, "data-error ordering", false,
                               "missing nu=7 counterpart");
        if (!(other->error < r.error))
            return make_result(8, "data-error ordering", false,
                               "k=" + std::to_string(r.k) + ": nu=7 error " +
                                   fmt(other->error) +
                                   " not below nu=5 error " + fmt(r.error));
    }
    return make_result(8, "data-error ordering", true,
                       "nu=7 data error < nu=5 at every sweep point (p=2)");
}

CriterionResult check_total_error_rate(const SweepCache& cache) {
    const double slope = slope_at(cache.total, 5, 2.0).slope;
    const double expected = 1.5 / 2.5;  // alpha/(alpha+1) for alpha = 3/2
    const bool pass = std::abs(slope - expected) <= 0.15 &&
                      cache.total.records.size() >= 5;
    return make_result(9, "a-priori total-error rate", pass,
                       "slope vs delta: " + fmt(slope) + " (expect " +
                           fmt(expected) + " +/- 0.15, " +
                           std::to_string(cache.total.records.size()) +
                           " points, seminorm " + fmt(cache.besov_seminorm) +
                           ")");
}

CriterionResult check_lemma_suites(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    auto random_steps = [&]() {
        const int n = 3 + static_cast<int>(rng() % 10);
        std::vector<double> t(n), v(n);
        for (int i = 0; i < n; ++i)
            t[i] = std::exp(std::log(1e-3) +
                            uni(rng) * (std::log(50.0) - std::log(1e-3)));
        std::sort(t.begin(), t.end());
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            acc += 0.05 + uni(rng);
            v[i] = acc;
        }
        return IncreasingFunction::steps(std::move(t), std::move(v));
    };

    int violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const IncreasingFunction g = random_steps();
        const double alpha = 0.05 + 0.4 * uni(rng);
        const double q = 1.0 + 2.0 * uni(rng);
        const double p = q + 0.5 + 2.5 * uni(rng);
        const double c = 1.1 + 8.9 * uni(rng);
        if (!verify_lemma_embedding_p(g, alpha, p, q, c).holds) ++violations;
    }
    int violations_inf = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const IncreasingFunction g = random_steps();
        const double alpha = 0.05 + 0.4 * uni(rng);
        const double q = 1.0 + 2.0 * uni(rng);
        const double c = 1.1 + 8.9 * uni(rng);
        if (!verify_lemma_embedding_inf(g, alpha, q, c).holds)
            ++violations_inf;
    }

    const struct {
        std::function<double(double)> f;
        double q;
    } analytic[] = {
        {[](double t) { return 1.5 * (1.0 - std::exp(-t)); }, 2.0},
        {[](double t) { return t / (1.0 + t); }, 1.5},
        {[](double t) { return 3.0 * (2.0 / kPi) * std::atan(t); }, 1.0},
    };
    int limit_fail = 0;
    std::ostringstream limits;
    for (const auto& a : analytic) {
        const LimitCheck lc = verify_lemma_limit(
            IncreasingFunction::analytic(a.f), a.q, 0.02);
        if (!lc.match) ++limit_fail;
        limits << ' ' << fmt(lc.limit_estimate) << '/' << fmt(lc.g_at_infinity);
    }

    const bool pass =
        violations == 0 && violations_inf == 0 && limit_fail == 0;
    return make_result(10, "embedding and limit lemmas", pass,
                       std::to_string(violations) + "+" +
                           std::to_string(violations_inf) +
                           " inequality violations in 200 trials; limits" +
                           limits.str() + " (tol 2%)");
}

CriterionResult check_convolution_form() {
    const Phantom phantom = unit_disk_phantom(2.0);
    const double L = 16.0 * kPi;
    const RadialKernel kernel{Window::smooth(5), L};

    // Dense radial table of K_L; the 2-D integrand then needs only a
    // linear interpolation per sample.
    const int table_n = 40000;
    const double r_max = 2.0;
    std::vector<double> table(table_n + 1);
    for (int i = 0; i <= table_n; ++i)
        table[i] = kernel_value(kernel, i * r_max / table_n);
    auto kernel_interp = [&](double r) {
        const double x = r / r_max * table_n;
        const int i = std::min(static_cast<int>(x), table_n - 1);
        const double w = x - i;
        return (1.0 - w) * table[i] + w * table[i + 1];
    };

    std::vector<std::pair<double, double>> probes;
    for (int iy = 0; iy < 5; ++iy)
        for (int ix = 0; ix < 5; ++ix)
            probes.emplace_back(-0.5 + 0.25 * ix, -0.5 + 0.25 * iy);

    // Direct 2-D quadrature of (f * K_L)(x0, y0) over the support of f.
    const int panels = 96;
    std::vector<double> direct(probes.size());
    for (std::size_t pi = 0; pi < probes.size(); ++pi) {
        const auto [x0, y0] = probes[pi];
        auto outer = [&](double y) {
            auto inner = [&](double x) {
                const double fx = phantom.evaluate(x, y);
                if (fx == 0.0) return 0.0;
                return fx * kernel_interp(std::hypot(x0 - x, y0 - y));
            };
            return gauss16_composite(inner, -1.0, 1.0, panels);
        };
        direct[pi] = gauss16_composite(outer, -1.0, 1.0, panels);
    }

    const ReconstructionConfig rc =
        ReconstructionConfig::smooth(16, 5, Interp::CubicSpline);
    const Sinogram sino = sample_sinogram(phantom, rc.grid());
    const std::vector<double> fbp = reconstruct_at(sino, rc, probes);

    double scale = 0.0, worst = 0.0;
    for (double v : direct) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < probes.size(); ++i)
        worst = std::max(worst, std::abs(fbp[i] - direct[i]));
    const double rel = worst / scale;
    return make_result(11, "convolution-form oracle", rel <= 0.01,
                       "max deviation " + fmt(rel) +
                           " relative to peak (tol 0.01, 25 probes)");
}

CriterionResult check_back_projection_bound(std::uint64_t seed) {
    const SinogramGrid grid = SinogramGrid::from_bandwidth(8.0 * kPi);
    const double diam = 2.0 * std::numbers::sqrt2;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const int side = 128;

    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> values(grid.size());
        for (double& v : values) v = uni(rng);
        const Image img = back_project(values, grid, side, Interp::Linear);
        const SinogramInterpolant interp(values, grid, Interp::Linear);

        for (double p : {1.0, 2.0, 4.0}) {
            // ||I h||_p^p with per-cell Simpson refinement of the
            // piecewise-linear interpolant.
            double norm_p = 0.0;
            for (int n = 0; n < grid.N; ++n) {
                double col = 0.0;
                for (int m = -grid.M; m < grid.M; ++m) {
                    const double a = grid.t(m), b = grid.t(m + 1);
                    auto f = [&](double t) {
                        return std::pow(std::abs(interp(t, n)), p);
                    };
                    const double h = (b - a) / 8.0;
                    double s = f(a) + f(b);
                    for (int j = 1; j < 8; ++j)
                        s += (j % 2 ? 4.0 : 2.0) * f(a + j * h);
                    col += s * h / 3.0;
                }
                norm_p += col * kPi / grid.N;
            }
            const double lhs = discrete_lp_norm(img, p);
            const double rhs = std::pow(kPi, -1.0 / p) *
                               std::pow(diam, 1.0 / p) *
                               std::pow(norm_p, 1.0 / p);
            if (lhs > 1.05 * rhs)
                return make_result(
                    12, "back-projection bound", false,
                    "trial " + std::to_string(trial) + " p=" + fmt(p) +
                        ": lhs " + fmt(lhs) + " > 1.05 * rhs " + fmt(rhs));
        }

        // Exact p = infinity bound for linear interpolation: the image max
        // cannot exceed the angle-average of the per-column node maxima.
        double rhs_inf = 0.0;
        for (int n = 0; n < grid.N; ++n) {
            double col = 0.0;
            for (int m = -grid.M; m <= grid.M; ++m)
                col = std::max(col,
                               std::abs(values[(m + grid.M) * grid.N + n]));
            rhs_inf += col;
        }
        rhs_inf /= grid.N;
        const double lhs_inf = discrete_lp_norm(img, kInf);
        if (lhs_inf > rhs_inf * (1.0 + 1e-12))
            return make_result(12, "back-projection bound", false,
                               "trial " + std::to_string(trial) +
                                   " p=inf: lhs " + fmt(lhs_inf) + " > rhs " +
                                   fmt(rhs_inf));
    }
    return make_result(12, "back-projection bound", true,
                       "200 random sinograms, p in {1,2,4} with 5% slack, "
                       "p=inf exact");
}

namespace {

double bessel_series(int order, double t) {
    const double x = 0.5 * t;
    double term = 1.0;
    for (int i = 1; i <= order; ++i) term *= x / i;
    double sum = term;
    for (int m = 1; m <= 60; ++m) {
        term *= -x * x / (m * (m + order));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-18)) break;
    }
    return sum;
}

}  // namespace

CriterionResult check_special_functions() {
    double worst_bessel = 0.0;
    for (int order = 1; order <= 9; ++order)
        for (double t = -10.0; t <= 10.0; t += 0.5)
            worst_bessel = std::max(
                worst_bessel,
                std::abs(bessel_j(order, t) - bessel_series(order, t)));

    double worst_filter = 0.0;
    for (int nu : {5, 7}) {
        const Filter filter{Window::smooth(nu), 1.0};
        for (double s = 0.0; s <= 5.0; s += 0.1) {
            // Independent oracle: (1/pi) int_0^1 S (1-S^2)^nu cos(S s) dS.
            auto f = [&](double S) {
                return S * std::pow(1.0 - S * S, nu) * std::cos(S * s) / kPi;
            };
            const double oracle = gauss16_composite(f, 0.0, 1.0, 64);
            worst_filter = std::max(
                worst_filter,
                std::abs(inv_fourier_filter(filter, s) - oracle));
        }
    }
    const bool pass = worst_bessel <= 1e-10 && worst_filter <= 1e-8;
    return make_result(13, "special-function agreement", pass,
                       "bessel max dev " + fmt(worst_bessel) +
                           " (tol 1e-10); filter max dev " +
                           fmt(worst_filter) + " (tol 1e-8)");
}

CriterionResult check_determinism(const std::filesystem::path& scratch_dir) {
    namespace fs = std::filesystem;
    const Options quick{Profile::Quick, 42};
    const fs::path dirs[2] = {scratch_dir / "run_a", scratch_dir / "run_b"};
    for (const fs::path& dir : dirs) {
        fs::create_directories(dir);
        emit_figures(run_sweeps(quick), dir);
    }
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dirs[0]))
        names.push_back(entry.path().filename().string());
    std::sort(names.begin(), names.end());
    if (names.empty())
        return make_result(14, "determinism", false, "no outputs produced");
    for (const std::string& name : names) {
        std::ifstream a(dirs[0] / name, std::ios::binary);
        std::ifstream b(dirs[1] / name, std::ios::binary);
        std::ostringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        if (!b || sa.str() != sb.str())
            return make_result(14, "determinism", false,
                               "outputs differ: " + name);
    }
    return make_result(14, "determinism", true,
                       std::to_string(names.size()) +
                           " files byte-identical across reruns");
}

void emit_figures(const SweepCache& cache,
                  const std::filesystem::path& out_dir) {
    auto write_pair = [&](const SweepResult& sweep, const std::string& stem) {
        io::write_sweep_csv(sweep.records, out_dir / (stem + ".csv"),
                            /*include_wall=*/false);
        io::write_slopes_csv(sweep.slopes, out_dir / (stem + ".slopes.csv"));
    };
    write_pair(cache.approx.at("shepp"), "approx_shepp_logan");
    write_pair(cache.approx.at("smooth1"), "approx_smooth_sigma1");
    write_pair(cache.approx.at("smooth2"), "approx_smooth_sigma2");
    write_pair(cache.data, "data_error_shepp_logan");
    write_pair(cache.total, "total_error_smooth_sigma1");
}

Report reproduce_paper(const std::filesystem::path& out_dir,
                       const Options& opts) {
    namespace fs = std::filesystem;
    if (!fs::exists(out_dir) || !fs::is_directory(out_dir))
        throw std::runtime_error("output directory does not exist: " +
                                 out_dir.string());

    const SweepCache cache = run_sweeps(opts);
    emit_figures(cache, out_dir);

    Report report;
    report.criteria.push_back(check_table_constants());
    report.criteria.push_back(check_filter_l1_norms());
    report.criteria.push_back(check_finiteness_frontier());
    report.criteria.push_back(check_moment_conditions());
    report.criteria.push_back(check_approximation_slopes(cache, opts));
    report.criteria.push_back(check_filter_order(cache));
    report.criteria.push_back(check_data_error(cache));
    report.criteria.push_back(check_data_order(cache));
    report.criteria.push_back(check_total_error_rate(cache));
    report.criteria.push_back(check_lemma_suites(opts.seed));
    report.criteria.push_back(check_convolution_form());
    report.criteria.push_back(check_back_projection_bound(opts.seed));
    report.criteria.push_back(check_special_functions());
    const fs::path scratch = out_dir / "determinism_check";
    fs::create_directories(scratch);
    report.criteria.push_back(check_determinism(scratch));

    report.all_pass = std::all_of(report.criteria.begin(),
                                  report.criteria.end(),
                                  [](const CriterionResult& c) { return c.pass; });

    std::ofstream summary(out_dir / "summary.txt");
    summary << "FBP error-analysis harness - criterion summary\n";
    summary << "profile seed " << opts.seed << "\n\n";
    summary << "Expected-vs-fitted slopes:\n";
    auto print_slopes = [&](const std::string& label, const SweepResult& s) {
        for (const auto& [key, fit] : s.slopes)
            summary << "  " << label << " nu=" << key.nu << " p=" << fmt(key.p)
                    << ": slope " << fmt(fit.slope) << " residual "
                    << fmt(fit.residual) << '\n';
    };
    print_slopes("approx shepp", cache.approx.at("shepp"));
    print_slopes("approx smooth1", cache.approx.at("smooth1"));
    print_slopes("approx smooth2", cache.approx.at("smooth2"));
    print_slopes("data shepp", cache.data);
    print_slopes("total smooth1", cache.total);
    summary << '\n';
    for (const CriterionResult& c : report.criteria)
        summary << "criterion " << c.id << " [" << c.name << "]: "
                << (c.pass ? "PASS" : "FAIL") << " - " << c.detail << '\n';
    summary << (report.all_pass ? "\nALL CRITERIA PASS\n"
                                : "\nSOME CRITERIA FAILED\n");
    return report;
}

}  // namespace fbp::report

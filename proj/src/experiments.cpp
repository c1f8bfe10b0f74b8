#include "fbp/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fbp/phantom.hpp"

namespace fbp {

namespace {

constexpr double kPi = std::numbers::pi;

double wall_ms_since(std::chrono::steady_clock::time_point t0) {
    const auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

// Norms reported alongside every noisy data set.
const std::vector<double> kReportNorms{1.0, 4.0 / 3.0, 2.0, 4.0,
                                       std::numeric_limits<double>::infinity()};

}  // namespace

double GaussianStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller on uniforms from the fully specified mt19937_64 stream.
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    const double u1 = ((engine_() >> 11) + 1.0) * kScale;  // in (0, 1]
    const double u2 = (engine_() >> 11) * kScale;          // in [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
}

NoisySinogram add_noise(const Sinogram& sino, const NoiseSpec& spec) {
    if (spec.relative_level < 0.0)
        throw std::invalid_argument("noise level must be non-negative");
    NoisySinogram out;
    out.sinogram = sino;
    double mean_abs = 0.0;
    for (double v : sino.values) mean_abs += std::abs(v);
    mean_abs /= static_cast<double>(sino.values.size());
    out.mean_abs = mean_abs;
    out.sigma = spec.relative_level * mean_abs;

    GaussianStream rng(spec.seed);
    Sinogram noise;
    noise.grid = sino.grid;
    noise.values.resize(sino.values.size());
    for (std::size_t i = 0; i < noise.values.size(); ++i) {
        noise.values[i] = out.sigma * rng.next();
        out.sinogram.values[i] += noise.values[i];
    }
    for (double p : kReportNorms)
        out.realized_delta[p] = sinogram_lp_norm(noise, p);
    return out;
}

SlopeFit fit_loglog_slope(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 3)
        throw std::invalid_argument("log-log fit needs at least 3 points");
    std::vector<double> lx(pts.size()), ly(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].first <= 0.0 || pts[i].second <= 0.0)
            throw std::invalid_argument("log-log fit needs positive data");
        lx[i] = std::log(pts[i].first);
        ly[i] = std::log(pts[i].second);
    }
    const double n = static_cast<double>(pts.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx < 1e-12 * n)
        throw std::invalid_argument("log-log fit design is degenerate");
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double r = ly[i] - fit.slope * lx[i] - fit.intercept;
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

namespace {

void fit_series_slopes(SweepResult& result, int fit_from_k) {
    std::map<SeriesKey, std::vector<std::pair<double, double>>> series;
    for (const ExperimentRecord& r : result.records) {
        if (r.k < fit_from_k) continue;
        series[SeriesKey{r.nu, r.p}].emplace_back(r.L, r.error);
    }
    for (const auto& [key, pts] : series)
        if (pts.size() >= 3) result.slopes[key] = fit_loglog_slope(pts);
}

}  // namespace

SweepResult sweep_approximation(const Phantom& phantom,
                                const SweepConfig& config) {
    SweepResult result;
    for (int nu : config.nu_list) {
        for (int k : config.k_list) {
            const auto t0 = std::chrono::steady_clock::now();
            const ReconstructionConfig rc = ReconstructionConfig::smooth(
                k, nu, config.interp, config.side);
            const Sinogram sino = sample_sinogram(phantom, rc.grid());
            Image rec = reconstruct(sino, rc);
            const Image ref = render(phantom, config.side);
            for (std::size_t i = 0; i < rec.values.size(); ++i)
                rec.values[i] -= ref.values[i];
            const double ms = wall_ms_since(t0);
            for (double p : config.p_list) {
                ExperimentRecord rec_out;
                rec_out.kind = "approx";
                rec_out.phantom = phantom.name;
                rec_out.nu = nu;
                rec_out.p = p;
                rec_out.k = k;
                rec_out.L = k * kPi;
                rec_out.error = disk_lp_norm(rec, p);
                rec_out.wall_ms = ms;
                result.records.push_back(std::move(rec_out));
            }
        }
    }
    fit_series_slopes(result, config.fit_from_k);
    return result;
}

SweepResult sweep_data_error(const Phantom& phantom, const SweepConfig& config,
                             const NoiseSpec& spec, int trials) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    SweepResult result;
    std::uint64_t point_index = 0;
    for (int nu : config.nu_list) {
        for (int k : config.k_list) {
            const auto t0 = std::chrono::steady_clock::now();
            const ReconstructionConfig rc = ReconstructionConfig::smooth(
                k, nu, config.interp, config.side);
            const Sinogram clean = sample_sinogram(phantom, rc.grid());
            std::map<double, double> mean_err, mean_delta;
            for (int trial = 0; trial < trials; ++trial) {
                NoiseSpec trial_spec = spec;
                trial_spec.seed =
                    spec.seed ^ (point_index * 1000003ull + trial);
                const NoisySinogram noisy = add_noise(clean, trial_spec);
                // f_L - f_L^delta is the reconstruction of the pure noise
                // sinogram, so reconstruct the difference directly.
                Sinogram noise_only;
                noise_only.grid = clean.grid;
                noise_only.values.resize(clean.values.size());
                for (std::size_t i = 0; i < clean.values.size(); ++i)
                    noise_only.values[i] =
                        noisy.sinogram.values[i] - clean.values[i];
                const Image err = reconstruct(noise_only, rc);
                for (double p : config.p_list) {
                    mean_err[p] += disk_lp_norm(err, p);
                    mean_delta[p] += noisy.realized_delta.at(p);
                }
            }
            const double ms = wall_ms_since(t0);
            for (double p : config.p_list) {
                ExperimentRecord rec;
                rec.kind = "data";
                rec.phantom = phantom.name;
                rec.nu = nu;
                rec.p = p;
                rec.k = k;
                rec.L = k * kPi;
                rec.error = mean_err[p] / trials;
                rec.delta = mean_delta[p] / trials;
                rec.trials = trials;
                rec.seed = spec.seed;
                rec.wall_ms = ms;
                result.records.push_back(std::move(rec));
            }
            ++point_index;
        }
    }
    fit_series_slopes(result, config.fit_from_k);
    return result;
}

BandwidthChoice apriori_bandwidth(double delta, double alpha, double seminorm) {
    if (delta <= 0.0 || alpha <= 0.0 || seminorm <= 0.0)
        throw std::invalid_argument(
            "apriori_bandwidth needs positive delta, alpha, seminorm");
    BandwidthChoice choice;
    choice.L_raw = std::pow(delta, -1.0 / (alpha + 1.0)) *
                   std::pow(seminorm, 1.0 / (alpha + 1.0));
    choice.k = std::max(1, static_cast<int>(std::lround(choice.L_raw / kPi)));
    choice.L = choice.k * kPi;
    return choice;
}

double noise_sigma_for_delta(const SinogramGrid& grid, double delta) {
    // E||eps||_2^2 = sigma^2 * (2M+1) * N * (d * pi / N).
    return delta / std::sqrt((2.0 * grid.M + 1.0) * grid.d * kPi);
}

SweepResult sweep_total_error(const Phantom& phantom, double alpha,
                              double seminorm, const std::vector<double>& deltas,
                              double p, int nu, const NoiseSpec& spec,
                              int trials, int side, Interp interp) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    SweepResult result;
    const Image ref = render(phantom, side);
    std::uint64_t point_index = 0;
    for (double delta : deltas) {
        const auto t0 = std::chrono::steady_clock::now();
        const BandwidthChoice bw = apriori_bandwidth(delta, alpha, seminorm);
        ReconstructionConfig rc =
            ReconstructionConfig::smooth(bw.k, nu, interp, side);
        const Sinogram clean = sample_sinogram(phantom, rc.grid());
        const double sigma = noise_sigma_for_delta(rc.grid(), delta);
        double mean_err = 0.0, mean_delta = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            GaussianStream rng(spec.seed ^ (point_index * 1000003ull + trial));
            Sinogram noisy = clean;
            Sinogram noise_only;
            noise_only.grid = clean.grid;
            noise_only.values.resize(clean.values.size());
            for (std::size_t i = 0; i < clean.values.size(); ++i) {
                noise_only.values[i] = sigma * rng.next();
                noisy.values[i] += noise_only.values[i];
            }
            Image rec = reconstruct(noisy, rc);
            for (std::size_t i = 0; i < rec.values.size(); ++i)
                rec.values[i] -= ref.values[i];
            mean_err += disk_lp_norm(rec, p);
            mean_delta += sinogram_lp_norm(noise_only, 2.0);
        }
        ExperimentRecord rec;
        rec.kind = "total";
        rec.phantom = phantom.name;
        rec.nu = nu;
        rec.p = p;
        rec.k = bw.k;
        rec.L = bw.L;
        rec.error = mean_err / trials;
        rec.delta = mean_delta / trials;
        rec.trials = trials;
        rec.seed = spec.seed;
        rec.wall_ms = wall_ms_since(t0);
        result.records.push_back(std::move(rec));
        ++point_index;
    }
    // Total-error slope is fitted against delta, not L.
    std::vector<std::pair<double, double>> pts;
    for (const ExperimentRecord& r : result.records)
        pts.emplace_back(r.delta, r.error);
    result.slopes[SeriesKey{nu, p}] = fit_loglog_slope(pts);
    return result;
}

}  // namespace fbp

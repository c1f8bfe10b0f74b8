#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fbp/grid.hpp"
#include "fbp/pipeline.hpp"

namespace fbp {

struct Phantom;

// Additive white Gaussian noise with standard deviation
// delta = relative_level * mean(|Rf|). The generator is mt19937_64 with a
// Box-Muller transform, both fully specified, so outputs are reproducible
// across platforms.
struct NoiseSpec {
    double relative_level = 0.1;
    std::uint64_t seed = 0;
};

struct NoisySinogram {
    Sinogram sinogram;
    double sigma = 0.0;   // realized per-sample standard deviation target
    double mean_abs = 0.0;  // m_Rf of the clean data
    // Realized discrete norms ||Rf - g^delta||_p for reporting.
    std::map<double, double> realized_delta;
};

NoisySinogram add_noise(const Sinogram& sino, const NoiseSpec& spec);

// Standalone seeded Gaussian stream (Box-Muller over mt19937_64); avoids
// std::normal_distribution, whose output sequence is implementation-defined.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}
    double next();

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

struct ExperimentRecord {
    std::string kind;     // approx | data | total
    std::string phantom;
    int nu = 0;
    double p = 2.0;
    int k = 0;
    double L = 0.0;
    double error = 0.0;
    int trials = 1;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
    double delta = 0.0;  // realized noise norm at this p (0 for approx)
};

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS residual of the log-log fit
};

struct SeriesKey {
    int nu = 0;
    double p = 2.0;
    auto operator<=>(const SeriesKey&) const = default;
};

struct SweepResult {
    std::vector<ExperimentRecord> records;
    std::map<SeriesKey, SlopeFit> slopes;
};

struct SweepConfig {
    std::vector<double> p_list{1.0, 2.0};
    std::vector<int> nu_list{5};
    std::vector<int> k_list{8, 12, 16, 24, 32, 48, 64};
    int fit_from_k = 0;  // slope fit restricted to k >= fit_from_k
    int side = 256;
    Interp interp = Interp::Linear;
};

// Noiseless approximation-error sweep over (nu, k); slope per (nu, p).
SweepResult sweep_approximation(const Phantom& phantom,
                                const SweepConfig& config);

// Data-error sweep ||f_L - f_L^delta||_p with `trials` noise realizations
// per point, mean-aggregated; growth slope per (nu, p). By linearity the
// data error equals the reconstruction of the pure noise sinogram.
SweepResult sweep_data_error(const Phantom& phantom, const SweepConfig& config,
                             const NoiseSpec& spec, int trials = 5);

struct BandwidthChoice {
    double L_raw = 0.0;
    int k = 1;
    double L = 0.0;  // k * pi
};

// A-priori rule L = delta^(-1/(alpha+1)) * seminorm^(1/(alpha+1)), rounded
// to the nearest admissible multiple of pi (at least pi).
BandwidthChoice apriori_bandwidth(double delta, double alpha, double seminorm);

// Per-sample standard deviation whose expected discrete L2 sinogram norm
// equals delta on the given grid.
double noise_sigma_for_delta(const SinogramGrid& grid, double delta);

// Total-error sweep ||f - f_L^delta||_p over a list of noise levels with
// the a-priori bandwidth rule; used for the a-priori rate check.
SweepResult sweep_total_error(const Phantom& phantom, double alpha,
                              double seminorm, const std::vector<double>& deltas,
                              double p, int nu, const NoiseSpec& spec,
                              int trials = 5, int side = 256,
                              Interp interp = Interp::CubicSpline);

// Ordinary least squares on (ln x, ln y); throws on fewer than 3 points,
// non-positive values, or a degenerate design.
SlopeFit fit_loglog_slope(const std::vector<std::pair<double, double>>& pts);

}  // namespace fbp

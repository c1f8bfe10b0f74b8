#include "fbp/pipeline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fbp/phantom.hpp"

namespace fbp {

namespace {
constexpr double kPi = std::numbers::pi;
}

ReconstructionConfig ReconstructionConfig::smooth(int k, int nu, Interp interp,
                                                  int side) {
    if (k < 1) throw std::invalid_argument("bandwidth multiple k must be >= 1");
    ReconstructionConfig cfg;
    cfg.filter = Filter{Window::smooth(nu), k * kPi};
    cfg.interp = interp;
    cfg.side = side;
    return cfg;
}

std::vector<double> filter_kernel_table(const Filter& filter,
                                        const SinogramGrid& grid) {
    std::vector<double> table(4 * grid.M + 1);
    // F^-1 A_L is even; fill positive offsets and mirror.
    for (int j = 0; j <= 2 * grid.M; ++j) {
        const double v = inv_fourier_filter(filter, j * grid.d);
        table[2 * grid.M + j] = v;
        table[2 * grid.M - j] = v;
    }
    return table;
}

FilteredSinogram filter_sinogram_with_table(const Sinogram& sino,
                                            std::span<const double> table) {
    const SinogramGrid& grid = sino.grid;
    if (table.size() != static_cast<std::size_t>(4 * grid.M + 1))
        throw std::invalid_argument("filter table size mismatch");
    FilteredSinogram out;
    out.grid = grid;
    out.values.assign(grid.size(), 0.0);
    const int M = grid.M, N = grid.N;
    const double* tab = table.data() + 2 * M;  // tab[j] = F^-1 A_L(j*d)
    for (int n = 0; n < N; ++n) {
        for (int m = -M; m <= M; ++m) {
            double acc = 0.0;
            for (int mp = -M; mp <= M; ++mp)
                acc += tab[m - mp] * sino.at(mp, n);
            out.values[(m + M) * N + n] = grid.d * acc;
        }
    }
    return out;
}

FilteredSinogram filter_sinogram(const Sinogram& sino, const Filter& filter) {
    return filter_sinogram_with_table(sino,
                                      filter_kernel_table(filter, sino.grid));
}

Image reconstruct(const Sinogram& sino, const ReconstructionConfig& config) {
    const FilteredSinogram filtered = filter_sinogram(sino, config.filter);
    Image img = back_project(filtered.values, filtered.grid, config.side,
                             config.interp);
    for (double& v : img.values) v *= 0.5;
    return img;
}

std::vector<double> reconstruct_at(
    const Sinogram& sino, const ReconstructionConfig& config,
    std::span<const std::pair<double, double>> points) {
    const FilteredSinogram filtered = filter_sinogram(sino, config.filter);
    std::vector<double> vals =
        back_project_at(filtered.values, filtered.grid, points, config.interp);
    for (double& v : vals) v *= 0.5;
    return vals;
}

double approximation_error(const Phantom& phantom,
                           const ReconstructionConfig& config, double p) {
    const Sinogram sino = sample_sinogram(phantom, config.grid());
    Image rec = reconstruct(sino, config);
    const Image ref = render(phantom, config.side);
    for (std::size_t i = 0; i < rec.values.size(); ++i)
        rec.values[i] -= ref.values[i];
    return disk_lp_norm(rec, p);
}

}  // namespace fbp

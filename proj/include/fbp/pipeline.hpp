#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fbp/filters.hpp"
#include "fbp/grid.hpp"

namespace fbp {

struct Phantom;

// Discrete FBP configuration. The bandwidth is a multiple of pi, L = k*pi,
// which couples the lattice as d = pi/L = 1/k, M = k, N = ceil(pi*k).
struct ReconstructionConfig {
    Filter filter;
    Interp interp = Interp::Linear;
    int side = 256;

    static ReconstructionConfig smooth(int k, int nu,
                                       Interp interp = Interp::Linear,
                                       int side = 256);
    SinogramGrid grid() const { return SinogramGrid::from_bandwidth(filter.L); }
};

// Filtered Radon data (F^-1 A_L *_D Rf) on the same lattice.
struct FilteredSinogram {
    SinogramGrid grid;
    std::vector<double> values;
};

// Discrete convolution with uniform trapezoidal weight d per angle:
// out[m][n] = d * sum_m' F^-1 A_L((m-m')d) * sino[m'][n]. Endpoints carry
// full weight; the integrand vanishes beyond the sampled support.
FilteredSinogram filter_sinogram(const Sinogram& sino, const Filter& filter);

// Precomputed table F^-1 A_L(j*d) for j = -(2M)..2M; exposed for reuse
// across reconstructions sharing a filter.
std::vector<double> filter_kernel_table(const Filter& filter,
                                        const SinogramGrid& grid);
FilteredSinogram filter_sinogram_with_table(
    const Sinogram& sino, std::span<const double> table);

// f_FBP = 1/2 * B_D(I[F^-1 A_L *_D Rf]) on a pixel grid.
Image reconstruct(const Sinogram& sino, const ReconstructionConfig& config);

// Same reconstruction evaluated at arbitrary points.
std::vector<double> reconstruct_at(
    const Sinogram& sino, const ReconstructionConfig& config,
    std::span<const std::pair<double, double>> points);

// discrete-Lp norm of render(phantom) - reconstruct(exact sinogram).
double approximation_error(const Phantom& phantom,
                           const ReconstructionConfig& config, double p);

}  // namespace fbp

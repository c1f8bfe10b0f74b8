#pragma once

#include <span>
#include <vector>

namespace fbp {

struct Phantom;

// Parallel-beam sampling lattice coupled to a bandwidth L via
// d = pi/L, M = round(1/d), N = ceil(pi*M). Lines run m = -M..M at
// offsets m*d; angles are theta_n = n*pi/N.
struct SinogramGrid {
    double d = 0.0;
    int M = 0;
    int N = 0;
    double L = 0.0;

    static SinogramGrid from_bandwidth(double L);
    // Validates d > 0, M >= 1, N >= 1 and the coupling invariants.
    void validate() const;

    int rows() const { return 2 * M + 1; }
    std::size_t size() const { return static_cast<std::size_t>(rows()) * N; }
    double t(int m) const { return m * d; }
    double theta(int n) const;
};

// Sampled Radon data on a SinogramGrid, values[(m+M)*N + n] ~ Rf(m*d, theta_n).
struct Sinogram {
    SinogramGrid grid;
    std::vector<double> values;

    double& at(int m, int n) { return values[(m + grid.M) * grid.N + n]; }
    double at(int m, int n) const { return values[(m + grid.M) * grid.N + n]; }
};

// Pixel image over [-1,1]^2; centers at x_i = -1 + (i+1/2)*2/side.
struct Image {
    int side = 0;
    std::vector<double> values;

    explicit Image(int side_ = 0)
        : side(side_),
          values(static_cast<std::size_t>(side_) * side_, 0.0) {}
    double coord(int i) const { return -1.0 + (i + 0.5) * 2.0 / side; }
    double& at(int ix, int iy) { return values[iy * static_cast<std::size_t>(side) + ix]; }
    double at(int ix, int iy) const { return values[iy * static_cast<std::size_t>(side) + ix]; }
};

enum class Interp { Linear, CubicSpline };

// Exact analytic Radon samples of a phantom on the lattice.
Sinogram sample_sinogram(const Phantom& phantom, const SinogramGrid& grid);

// Pointwise phantom rendering at pixel centers.
Image render(const Phantom& phantom, int side);

// Per-angle interpolant in the t-variable over [-M*d, M*d], zero outside.
class SinogramInterpolant {
  public:
    SinogramInterpolant(std::span<const double> values,
                        const SinogramGrid& grid, Interp interp);
    // Value of column n at offset t.
    double operator()(double t, int n) const;

  private:
    SinogramGrid grid_;
    Interp interp_;
    std::vector<double> values_;  // (2M+1) x N, row-major over m
    std::vector<double> second_;  // spline second derivatives, same layout
};

// Discrete back projection (1/N) * sum_n h(x cos theta_n + y sin theta_n)
// onto a side x side image; rectangle rule in the angle, which on [0,pi)
// with the periodic identification equals the composite trapezoidal rule.
Image back_project(std::span<const double> values, const SinogramGrid& grid,
                   int side, Interp interp = Interp::Linear);

// Back projection evaluated at arbitrary points.
std::vector<double> back_project_at(
    std::span<const double> values, const SinogramGrid& grid,
    std::span<const std::pair<double, double>> points,
    Interp interp = Interp::Linear);

// (sum |v|^p dx dy)^(1/p) with dx = dy = 2/side; max |v| for p = inf.
double discrete_lp_norm(const Image& img, double p);

// Same norm restricted to pixel centers inside the closed unit disk. Error
// norms use this region: pixels beyond radius 1 require filtered-data
// samples outside the lattice range |t| <= M*d, where the slowly decaying
// filter tails are clamped to zero and would pollute the norm.
double disk_lp_norm(const Image& img, double p);

// Riemann-sum norm with cell measure d * pi / N; max |v| for p = inf.
double sinogram_lp_norm(const Sinogram& sino, double p);

}  // namespace fbp

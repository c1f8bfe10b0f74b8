#include "fbp/grid.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fbp/phantom.hpp"

namespace fbp {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

SinogramGrid SinogramGrid::from_bandwidth(double L) {
    if (L <= 0.0) throw std::invalid_argument("bandwidth must be positive");
    SinogramGrid g;
    g.L = L;
    g.d = kPi / L;
    g.M = static_cast<int>(std::lround(1.0 / g.d));
    if (g.M < 1) g.M = 1;
    g.N = static_cast<int>(std::ceil(kPi * g.M));
    g.validate();
    return g;
}

void SinogramGrid::validate() const {
    if (!(d > 0.0) || M < 1 || N < 1 || !(L > 0.0))
        throw std::invalid_argument("invalid sinogram grid");
}

double SinogramGrid::theta(int n) const { return n * kPi / N; }

Sinogram sample_sinogram(const Phantom& phantom, const SinogramGrid& grid) {
    grid.validate();
    Sinogram sino;
    sino.grid = grid;
    sino.values.resize(grid.size());
    for (int n = 0; n < grid.N; ++n) {
        const double theta = grid.theta(n);
        for (int m = -grid.M; m <= grid.M; ++m)
            sino.at(m, n) = phantom.radon(grid.t(m), theta);
    }
    return sino;
}

Image render(const Phantom& phantom, int side) {
    Image img(side);
    for (int iy = 0; iy < side; ++iy) {
        const double y = img.coord(iy);
        for (int ix = 0; ix < side; ++ix)
            img.at(ix, iy) = phantom.evaluate(img.coord(ix), y);
    }
    return img;
}

SinogramInterpolant::SinogramInterpolant(std::span<const double> values,
                                         const SinogramGrid& grid,
                                         Interp interp)
    : grid_(grid), interp_(interp), values_(values.begin(), values.end()) {
    if (values.size() != grid.size())
        throw std::invalid_argument("sinogram shape mismatch");
    if (interp_ == Interp::CubicSpline) {
        // Natural cubic spline per angle column: solve the tridiagonal
        // system for second derivatives (Thomas algorithm).
        const int R = grid_.rows();
        const int N = grid_.N;
        second_.assign(values_.size(), 0.0);
        if (R >= 3) {
            // System: m[i-1] + 4 m[i] + m[i+1] = 6 (y[i-1]-2y[i]+y[i+1])/h^2
            // for interior i, with m[0] = m[R-1] = 0.
            std::vector<double> diag(R), rhs(R);
            const double h2 = grid_.d * grid_.d;
            for (int n = 0; n < N; ++n) {
                for (int i = 1; i < R - 1; ++i) {
                    const double y0 = values_[(i - 1) * N + n];
                    const double y1 = values_[i * N + n];
                    const double y2 = values_[(i + 1) * N + n];
                    const double r = 6.0 / h2 * (y0 - 2.0 * y1 + y2);
                    if (i == 1) {
                        diag[i] = 4.0;
                        rhs[i] = r;
                    } else {
                        const double w = 1.0 / diag[i - 1];
                        diag[i] = 4.0 - w;
                        rhs[i] = r - w * rhs[i - 1];
                    }
                }
                second_[(R - 1) * N + n] = 0.0;
                double next = 0.0;
                for (int i = R - 2; i >= 1; --i) {
                    const double m = (rhs[i] - next) / diag[i];
                    second_[i * N + n] = m;
                    next = m;
                }
            }
        }
    }
}

double SinogramInterpolant::operator()(double t, int n) const {
    const double pos = t / grid_.d + grid_.M;
    const int R = grid_.rows();
    if (pos < 0.0 || pos > R - 1) return 0.0;  // outside the sampled t-range
    int i = static_cast<int>(pos);
    if (i >= R - 1) i = R - 2;
    const double u = pos - i;
    const int N = grid_.N;
    const double y0 = values_[i * N + n];
    const double y1 = values_[(i + 1) * N + n];
    if (interp_ == Interp::Linear) return y0 + u * (y1 - y0);
    const double h = grid_.d;
    const double m0 = second_[i * N + n];
    const double m1 = second_[(i + 1) * N + n];
    const double a = 1.0 - u;
    return a * y0 + u * y1 +
           h * h / 6.0 *
               ((a * a * a - a) * m0 + (u * u * u - u) * m1);
}

Image back_project(std::span<const double> values, const SinogramGrid& grid,
                   int side, Interp interp) {
    const SinogramInterpolant h(values, grid, interp);
    Image img(side);
    const int N = grid.N;
    std::vector<double> ct(N), st(N);
    for (int n = 0; n < N; ++n) {
        ct[n] = std::cos(grid.theta(n));
        st[n] = std::sin(grid.theta(n));
    }
    for (int iy = 0; iy < side; ++iy) {
        const double y = img.coord(iy);
        for (int ix = 0; ix < side; ++ix) {
            const double x = img.coord(ix);
            double acc = 0.0;
            for (int n = 0; n < N; ++n)
                acc += h(x * ct[n] + y * st[n], n);
            img.at(ix, iy) = acc / N;
        }
    }
    return img;
}

std::vector<double> back_project_at(
    std::span<const double> values, const SinogramGrid& grid,
    std::span<const std::pair<double, double>> points, Interp interp) {
    const SinogramInterpolant h(values, grid, interp);
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& [x, y] : points) {
        double acc = 0.0;
        for (int n = 0; n < grid.N; ++n) {
            const double theta = grid.theta(n);
            acc += h(x * std::cos(theta) + y * std::sin(theta), n);
        }
        out.push_back(acc / grid.N);
    }
    return out;
}

namespace {

double lp_accumulate(std::span<const double> v, double p, double cell) {
    if (p < 1.0) throw std::invalid_argument("p must be >= 1");
    if (p == kInf) {
        double mx = 0.0;
        for (double x : v) mx = std::max(mx, std::abs(x));
        return mx;
    }
    double acc = 0.0;
    if (p == 1.0) {
        for (double x : v) acc += std::abs(x);
    } else if (p == 2.0) {
        for (double x : v) acc += x * x;
    } else {
        for (double x : v) acc += std::pow(std::abs(x), p);
    }
    return std::pow(acc * cell, 1.0 / p);
}

}  // namespace

double discrete_lp_norm(const Image& img, double p) {
    const double dx = 2.0 / img.side;
    return lp_accumulate(img.values, p, dx * dx);
}

double disk_lp_norm(const Image& img, double p) {
    std::vector<double> inside;
    inside.reserve(img.values.size());
    for (int iy = 0; iy < img.side; ++iy) {
        const double y = img.coord(iy);
        for (int ix = 0; ix < img.side; ++ix) {
            const double x = img.coord(ix);
            if (x * x + y * y <= 1.0) inside.push_back(img.at(ix, iy));
        }
    }
    const double dx = 2.0 / img.side;
    return lp_accumulate(inside, p, dx * dx);
}

double sinogram_lp_norm(const Sinogram& sino, double p) {
    const double cell = sino.grid.d * kPi / sino.grid.N;
    return lp_accumulate(sino.values, p, cell);
}

}  // namespace fbp

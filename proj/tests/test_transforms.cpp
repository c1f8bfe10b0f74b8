#include <cmath>
#include <doctest.h>
#include <numbers>
#include <vector>

#include "fbp/grid.hpp"
#include "fbp/phantom.hpp"

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("grid coupling d = pi/L, M = round(1/d), N = ceil(pi M)") {
    for (int k : {1, 4, 16, 64}) {
        const fbp::SinogramGrid g = fbp::SinogramGrid::from_bandwidth(k * kPi);
        CHECK(g.d == doctest::Approx(1.0 / k).epsilon(1e-15));
        CHECK(g.M == k);
        CHECK(g.N == static_cast<int>(std::ceil(kPi * k)));
        CHECK(g.rows() == 2 * k + 1);
        CHECK(g.t(-g.M) == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(g.theta(0) == 0.0);
        CHECK(g.theta(g.N - 1) < kPi);
    }
    CHECK_THROWS(fbp::SinogramGrid::from_bandwidth(0.0));
}

TEST_CASE("sample_sinogram evaluates the analytic radon transform at nodes") {
    const fbp::Phantom p = fbp::unit_disk_phantom(1.0);
    const fbp::SinogramGrid g = fbp::SinogramGrid::from_bandwidth(8.0 * kPi);
    const fbp::Sinogram sino = fbp::sample_sinogram(p, g);
    for (int n : {0, 5, g.N - 1})
        for (int m : {-g.M, -3, 0, 2, g.M})
            CHECK(sino.at(m, n) ==
                  doctest::Approx(p.radon(g.t(m), g.theta(n))).epsilon(1e-15));
}

TEST_CASE("interpolants reproduce node values and vanish outside the range") {
    const fbp::SinogramGrid g = fbp::SinogramGrid::from_bandwidth(4.0 * kPi);
    std::vector<double> values(g.size());
    for (int m = -g.M; m <= g.M; ++m)
        for (int n = 0; n < g.N; ++n)
            values[(m + g.M) * g.N + n] = std::sin(0.7 * m) + 0.1 * n;
    for (fbp::Interp interp : {fbp::Interp::Linear, fbp::Interp::CubicSpline}) {
        const fbp::SinogramInterpolant h(values, g, interp);
        for (int m = -g.M; m <= g.M; ++m)
            CHECK(h(g.t(m), 2) ==
                  doctest::Approx(values[(m + g.M) * g.N + 2]).epsilon(1e-13));
        CHECK(h(1.0 + g.d, 0) == 0.0);
        CHECK(h(-1.5, 3) == 0.0);
    }
}

TEST_CASE("linear interpolation is exact on affine data") {
    const fbp::SinogramGrid g = fbp::SinogramGrid::from_bandwidth(4.0 * kPi);
    std::vector<double> values(g.size());
    for (int m = -g.M; m <= g.M; ++m)
        for (int n = 0; n < g.N; ++n)
            values[(m + g.M) * g.N + n] = 3.0 * g.t(m) + 1.0;
    const fbp::SinogramInterpolant h(values, g, fbp::Interp::Linear);
    for (double t : {-0.93, -0.21, 0.0, 0.4447, 0.99})
        CHECK(h(t, 1) == doctest::Approx(3.0 * t + 1.0).epsilon(1e-13));
}

TEST_CASE("back projection of constant data is constant on the unit disk") {
    const fbp::SinogramGrid g = fbp::SinogramGrid::from_bandwidth(8.0 * kPi);
    const std::vector<double> values(g.size(), 2.5);
    const fbp::Image img = fbp::back_project(values, g, 64);
    for (int iy = 0; iy < 64; ++iy)
        for (int ix = 0; ix < 64; ++ix) {
            const double x = img.coord(ix), y = img.coord(iy);
            if (x * x + y * y <= 0.95)
                CHECK(img.at(ix, iy) == doctest::Approx(2.5).epsilon(1e-12));
        }
}

TEST_CASE("back_project_at agrees with the image at pixel centers") {
    const fbp::SinogramGrid g = fbp::SinogramGrid::from_bandwidth(4.0 * kPi);
    std::vector<double> values(g.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = std::cos(0.013 * static_cast<double>(i));
    const fbp::Image img = fbp::back_project(values, g, 16);
    std::vector<std::pair<double, double>> pts;
    for (int i : {0, 5, 11}) pts.emplace_back(img.coord(i), img.coord(3));
    const std::vector<double> at = fbp::back_project_at(values, g, pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(at[i] ==
              doctest::Approx(img.at(i == 0 ? 0 : (i == 1 ? 5 : 11), 3))
                  .epsilon(1e-13));
}

TEST_CASE("discrete and disk Lp norms of the constant image") {
    fbp::Image img(200);
    for (double& v : img.values) v = 1.0;
    // [-1,1]^2 has measure 4; the unit disk has measure pi.
    CHECK(fbp::discrete_lp_norm(img, 1.0) ==
          doctest::Approx(4.0).epsilon(1e-12));
    CHECK(fbp::discrete_lp_norm(img, 2.0) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fbp::discrete_lp_norm(img, kPi) ==
          doctest::Approx(std::pow(4.0, 1.0 / kPi)).epsilon(1e-12));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(fbp::discrete_lp_norm(img, inf) == 1.0);
    CHECK(fbp::disk_lp_norm(img, 1.0) == doctest::Approx(kPi).epsilon(1e-3));
    CHECK(fbp::disk_lp_norm(img, 2.0) ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-3));
    CHECK(fbp::disk_lp_norm(img, inf) == 1.0);
    CHECK_THROWS(fbp::discrete_lp_norm(img, 0.5));
}

TEST_CASE("sinogram Riemann norm of constant data") {
    const fbp::SinogramGrid g = fbp::SinogramGrid::from_bandwidth(8.0 * kPi);
    fbp::Sinogram sino;
    sino.grid = g;
    sino.values.assign(g.size(), 1.0);
    // Total measure: (2M+1) d * pi.
    CHECK(fbp::sinogram_lp_norm(sino, 1.0) ==
          doctest::Approx((2 * g.M + 1) * g.d * kPi).epsilon(1e-12));
}

#include <cmath>
#include <doctest.h>
#include <numbers>

#include "fbp/filters.hpp"
#include "fbp/quadrature.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

// Ascending power series for J_n, an oracle independent of the integral
// representation used by bessel_j.
double bessel_series(int order, double t) {
    const double x = 0.5 * t;
    double term = 1.0;
    for (int i = 1; i <= order; ++i) term *= x / i;
    double sum = term;
    for (int m = 1; m <= 80; ++m) {
        term *= -x * x / (m * (m + order));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-18)) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("bessel_j matches the power series on |t| <= 10, orders 0..9") {
    for (int order = 0; order <= 9; ++order)
        for (double t = -10.0; t <= 10.0; t += 0.25)
            CHECK(std::abs(fbp::bessel_j(order, t) - bessel_series(order, t)) <=
                  1e-10);
}

TEST_CASE("window sanity") {
    for (const fbp::Window w :
         {fbp::Window::ram_lak(), fbp::Window::shepp_logan(),
          fbp::Window::cosine(), fbp::Window::hamming(0.54),
          fbp::Window::smooth(5)}) {
        CHECK(fbp::window_value(w, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(fbp::window_value(w, 1.3) == 0.0);
        CHECK(fbp::window_value(w, -1.01) == 0.0);
        CHECK(fbp::window_value(w, 0.4) ==
              doctest::Approx(fbp::window_value(w, -0.4)).epsilon(1e-14));
    }
    CHECK(fbp::window_value(fbp::Window::ram_lak(), 0.9) == 1.0);
    CHECK(fbp::window_value(fbp::Window::smooth(5), 0.5) ==
          doctest::Approx(std::pow(0.75, 5)).epsilon(1e-14));
    CHECK_THROWS(fbp::Window::hamming(0.3));
    CHECK_THROWS(fbp::Window::smooth(-1));
}

TEST_CASE("filter value A_L(S) = |S| W(S/L)") {
    const fbp::Filter f{fbp::Window::smooth(5), 8.0};
    CHECK(f.value(4.0) ==
          doctest::Approx(4.0 * std::pow(0.75, 5)).epsilon(1e-14));
    CHECK(f.value(-4.0) == f.value(4.0));
    CHECK(f.value(9.0) == 0.0);
}

TEST_CASE("inverse Fourier filter matches quadrature oracle on [0,5]") {
    for (int nu : {5, 7}) {
        const fbp::Filter filter{fbp::Window::smooth(nu), 1.0};
        for (double s = 0.0; s <= 5.0; s += 0.25) {
            auto f = [&](double S) {
                return S * std::pow(1.0 - S * S, nu) * std::cos(S * s) / kPi;
            };
            const double oracle = fbp::gauss16_composite(f, 0.0, 1.0, 64);
            CHECK(std::abs(fbp::inv_fourier_filter(filter, s) - oracle) <=
                  1e-8);
        }
    }
}

TEST_CASE("inverse Fourier filter scales as L^2 F^-1A(L s)") {
    const fbp::Filter unit{fbp::Window::smooth(5), 1.0};
    const fbp::Filter scaled{fbp::Window::smooth(5), 8.0};
    for (double s : {0.0, 0.1, 0.5, 1.0})
        CHECK(fbp::inv_fourier_filter(scaled, s) ==
              doctest::Approx(64.0 * fbp::inv_fourier_filter(unit, 8.0 * s))
                  .epsilon(1e-10));
}

TEST_CASE("filter L1 norms near the reference values") {
    CHECK(fbp::l1_norm_inv_fourier({fbp::Window::smooth(5), 1.0}).value ==
          doctest::Approx(0.2976).epsilon(1e-2));
    CHECK(fbp::l1_norm_inv_fourier({fbp::Window::smooth(7), 1.0}).value ==
          doctest::Approx(0.2541).epsilon(1e-2));
    CHECK_THROWS(fbp::l1_norm_inv_fourier({fbp::Window::smooth(0), 1.0}));
}

TEST_CASE("kernel value at the origin and bandwidth scaling") {
    // K_L(0) = (2 pi)^-2 int W(|xi|/L) dxi = L^2 / (4 pi (nu+1)).
    const fbp::RadialKernel k1{fbp::Window::smooth(5), 1.0};
    const fbp::RadialKernel k8{fbp::Window::smooth(5), 8.0};
    CHECK(fbp::kernel_value(k1, 0.0) ==
          doctest::Approx(1.0 / (24.0 * kPi)).epsilon(1e-12));
    CHECK(fbp::kernel_value(k8, 0.3) ==
          doctest::Approx(64.0 * fbp::kernel_value(k1, 2.4)).epsilon(1e-10));
}

TEST_CASE("alpha constants: spot values and divergence frontier") {
    const fbp::AlphaConstant c = fbp::kernel_alpha_constant(5, 1.0);
    REQUIRE(!c.divergent);
    CHECK(c.value == doctest::Approx(4.3460).epsilon(0.01));
    CHECK(fbp::kernel_alpha_constant(1, 1.0).divergent);
    CHECK(fbp::kernel_alpha_constant(2, 1.5).divergent);
    CHECK(!fbp::kernel_alpha_constant(2, 1.4).divergent);
}

TEST_CASE("first-order kernel moments vanish") {
    CHECK(std::abs(fbp::kernel_moment(5, 1, 0)) <= 1e-10);
    CHECK(std::abs(fbp::kernel_moment(5, 0, 1)) <= 1e-10);
    CHECK(fbp::kernel_moment(5, 2, 0) ==
          doctest::Approx(fbp::kernel_moment(5, 0, 2)).epsilon(1e-12));
    CHECK(std::abs(fbp::kernel_moment(5, 2, 0)) > 1e-6);
}

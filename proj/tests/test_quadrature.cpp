#include <cmath>
#include <doctest.h>
#include <numbers>

#include "fbp/quadrature.hpp"

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gauss16 integrates polynomials up to degree 31 exactly") {
    for (int deg : {0, 1, 5, 12, 21, 31}) {
        auto f = [deg](double x) { return std::pow(x, deg); };
        const double exact =
            (std::pow(3.0, deg + 1) - std::pow(-1.0, deg + 1)) / (deg + 1);
        CHECK(fbp::gauss16(f, -1.0, 3.0) ==
              doctest::Approx(exact).epsilon(1e-13));
    }
}

TEST_CASE("gauss16_composite matches analytic integrals") {
    const double v = fbp::gauss16_composite(
        [](double x) { return std::exp(-x * x); }, -6.0, 6.0, 16);
    CHECK(v == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));

    const double w = fbp::gauss16_composite(
        [](double x) { return std::cos(10.0 * x); }, 0.0, 2.0, 8);
    CHECK(w == doctest::Approx(std::sin(20.0) / 10.0).epsilon(1e-12));
}

TEST_CASE("adaptive_simpson handles smooth integrands") {
    const double v = fbp::adaptive_simpson(
        [](double x) { return std::sin(x); }, 0.0, kPi, 1e-12);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("adaptive_simpson handles a jump discontinuity") {
    const double v = fbp::adaptive_simpson(
        [](double x) { return x < 0.3 ? 1.0 : 2.0; }, 0.0, 1.0, 1e-10);
    CHECK(v == doctest::Approx(1.7).epsilon(1e-7));
}

TEST_CASE("adaptive_simpson handles an integrable square-root singularity") {
    const double v = fbp::adaptive_simpson(
        [](double x) { return std::sqrt(1.0 - x * x); }, -1.0, 1.0, 1e-11);
    CHECK(v == doctest::Approx(kPi / 2.0).epsilon(1e-8));
}

#include <cmath>
#include <doctest.h>
#include <numbers>
#include <random>

#include "fbp/besov.hpp"
#include "fbp/grid.hpp"
#include "fbp/phantom.hpp"

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("c_alpha_q closed form") {
    CHECK(fbp::constant_c_alpha_q(0.5, 2.0) ==
          doctest::Approx(std::sqrt(2.0 * std::exp(1.0))).epsilon(1e-14));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(fbp::constant_c_alpha_q(0.7, inf) == 1.0);
    CHECK_THROWS(fbp::constant_c_alpha_q(1.5, 2.0));
}

TEST_CASE("weighted norms of a single-step function are exact") {
    // g = v for t >= t0: weighted_lq = v t0^-a (a q)^(-1/q),
    // weighted_sup = v t0^-a.
    const double t0 = 0.37, v = 2.2, a = 0.3, q = 1.7;
    const fbp::IncreasingFunction g = fbp::IncreasingFunction::steps({t0}, {v});
    CHECK(g.weighted_lq(a, q) ==
          doctest::Approx(v * std::pow(t0, -a) * std::pow(a * q, -1.0 / q))
              .epsilon(1e-12));
    CHECK(g.weighted_sup(a) ==
          doctest::Approx(v * std::pow(t0, -a)).epsilon(1e-12));
    CHECK(g.value_at_infinity() == v);
    CHECK(g(t0 / 2) == 0.0);
    CHECK(g(t0) == v);
}

TEST_CASE("embedding inequalities hold on random step functions") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        std::vector<double> t(n), v(n);
        for (int i = 0; i < n; ++i) t[i] = 0.01 + 20.0 * uni(rng);
        std::sort(t.begin(), t.end());
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            acc += 0.1 + uni(rng);
            v[i] = acc;
        }
        const fbp::IncreasingFunction g =
            fbp::IncreasingFunction::steps(std::move(t), std::move(v));
        const double alpha = 0.1 + 0.3 * uni(rng);
        const double q = 1.0 + uni(rng);
        const double p = q + 1.0 + uni(rng);
        const double c = 1.5 + 5.0 * uni(rng);
        const fbp::LemmaCheck lp =
            fbp::verify_lemma_embedding_p(g, alpha, p, q, c);
        CHECK(lp.holds);
        CHECK(lp.lhs <= lp.rhs);
        const fbp::LemmaCheck li =
            fbp::verify_lemma_embedding_inf(g, alpha, q, c);
        CHECK(li.holds);
    }
}

TEST_CASE("small-alpha limit recovers g at infinity") {
    const fbp::IncreasingFunction g = fbp::IncreasingFunction::analytic(
        [](double t) { return 1.0 - std::exp(-t); });
    const fbp::LimitCheck lc = fbp::verify_lemma_limit(g, 2.0, 0.02);
    CHECK(lc.match);
    CHECK(lc.limit_estimate == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("field norms and modulus of continuity") {
    const fbp::Phantom disk = fbp::unit_disk_phantom(0.0);
    const fbp::Field f = fbp::phantom_field(disk);
    fbp::ModulusOptions mo;
    mo.grid_side = 256;
    // ||chi_disk||_2 = sqrt(pi).
    CHECK(fbp::field_lp_norm(f, 2.0, mo) ==
          doctest::Approx(std::sqrt(kPi)).epsilon(0.01));
    // Shifting chi_disk by delta changes an area ~ 4 delta, so the
    // L1 modulus is ~ 4 delta for small delta.
    const double m1 = fbp::modulus_of_continuity(f, 1.0, 0.01, mo);
    CHECK(m1 == doctest::Approx(0.04).epsilon(0.15));
    CHECK_THROWS(fbp::modulus_of_continuity(f, 1.0, 0.0, mo));
    CHECK(fbp::modulus_of_continuity(f, 1.0, 0.05, mo) > m1);
}

TEST_CASE("image_field interpolates pixel values") {
    fbp::Image img(8);
    for (int iy = 0; iy < 8; ++iy)
        for (int ix = 0; ix < 8; ++ix)
            img.at(ix, iy) = 0.5 * img.coord(ix) - img.coord(iy);
    const fbp::Field f = fbp::image_field(img);
    // Bilinear interpolation is exact on affine data between pixel centers.
    CHECK(f(0.1, -0.2) == doctest::Approx(0.5 * 0.1 + 0.2).epsilon(1e-12));
    CHECK(f(1.5, 0.0) == 0.0);
}

TEST_CASE("besov seminorm scales linearly with the phantom weight") {
    fbp::Phantom p = fbp::unit_disk_phantom(2.0);
    fbp::BesovOptions opts;
    opts.modulus.grid_side = 96;
    opts.t_points = 12;
    const double base = fbp::besov_seminorm(p, 1.5, 2.0, 2.0, opts).value;
    CHECK(base > 0.0);
    p.components[0].weight = 3.0;
    const double scaled = fbp::besov_seminorm(p, 1.5, 2.0, 2.0, opts).value;
    CHECK(scaled == doctest::Approx(3.0 * base).epsilon(1e-10));
    CHECK_THROWS(fbp::besov_seminorm(p, 2.0, 2.0, 2.0, opts));  // integer alpha
}

#include <cmath>
#include <doctest.h>
#include <numbers>
#include <vector>

#include "fbp/experiments.hpp"
#include "fbp/phantom.hpp"

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gaussian stream is deterministic and standard normal") {
    fbp::GaussianStream a(123), b(123), c(124);
    bool differs = false;
    double sum = 0.0, sumsq = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double x = a.next();
        CHECK(x == b.next());
        if (x != c.next()) differs = true;
        sum += x;
        sumsq += x * x;
    }
    CHECK(differs);
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(sumsq / n == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("add_noise targets delta = relative_level * mean |Rf|") {
    const fbp::Phantom p = fbp::unit_disk_phantom(1.0);
    const fbp::SinogramGrid g = fbp::SinogramGrid::from_bandwidth(16.0 * kPi);
    const fbp::Sinogram clean = fbp::sample_sinogram(p, g);
    fbp::NoiseSpec spec;
    spec.relative_level = 0.1;
    spec.seed = 5;
    const fbp::NoisySinogram noisy = fbp::add_noise(clean, spec);

    double mean_abs = 0.0;
    for (double v : clean.values) mean_abs += std::abs(v);
    mean_abs /= clean.values.size();
    CHECK(noisy.mean_abs == doctest::Approx(mean_abs).epsilon(1e-14));
    CHECK(noisy.sigma == doctest::Approx(0.1 * mean_abs).epsilon(1e-14));
    REQUIRE(noisy.realized_delta.count(2.0) == 1);
    // Realized discrete L2 noise norm should be near its expectation
    // sigma * sqrt(total lattice measure).
    const double expect =
        noisy.sigma * std::sqrt((2 * g.M + 1) * g.d * kPi);
    CHECK(noisy.realized_delta.at(2.0) ==
          doctest::Approx(expect).epsilon(0.05));

    const fbp::NoisySinogram again = fbp::add_noise(clean, spec);
    CHECK(again.sinogram.values == noisy.sinogram.values);
}

TEST_CASE("slope fit recovers a known power law") {
    std::vector<std::pair<double, double>> pts;
    for (double x = 1.0; x <= 200.0; x *= 1.5)
        pts.emplace_back(x, std::sqrt(x) * (1.0 + 0.01 * std::sin(x)));
    const fbp::SlopeFit fit = fbp::fit_loglog_slope(pts);
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(0.02));
    CHECK(fit.residual < 0.02);
}

TEST_CASE("slope fit rejects degenerate inputs") {
    CHECK_THROWS(fbp::fit_loglog_slope({{1.0, 1.0}, {2.0, 2.0}}));
    CHECK_THROWS(
        fbp::fit_loglog_slope({{1.0, 1.0}, {2.0, -2.0}, {3.0, 3.0}}));
    CHECK_THROWS(
        fbp::fit_loglog_slope({{2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}}));
}

TEST_CASE("a-priori bandwidth rule") {
    // L_raw = delta^(-1/(alpha+1)) * seminorm^(1/(alpha+1)), alpha = 1.5.
    const fbp::BandwidthChoice c = fbp::apriori_bandwidth(1e-3, 1.5, 2.0);
    const double L_raw = std::pow(1e-3, -0.4) * std::pow(2.0, 0.4);
    CHECK(c.L_raw == doctest::Approx(L_raw).epsilon(1e-12));
    CHECK(c.k == static_cast<int>(std::lround(L_raw / kPi)));
    CHECK(c.L == doctest::Approx(c.k * kPi).epsilon(1e-12));
    // Very large delta still yields an admissible bandwidth.
    CHECK(fbp::apriori_bandwidth(100.0, 1.5, 1.0).k == 1);
}

TEST_CASE("noise sigma inverts the expected L2 norm") {
    const fbp::SinogramGrid g = fbp::SinogramGrid::from_bandwidth(8.0 * kPi);
    const double delta = 0.05;
    const double sigma = fbp::noise_sigma_for_delta(g, delta);
    CHECK(sigma * std::sqrt((2 * g.M + 1) * g.d * kPi) ==
          doctest::Approx(delta).epsilon(1e-12));
}

TEST_CASE("approximation sweep produces records and fitted slopes") {
    fbp::SweepConfig cfg;
    cfg.k_list = {4, 6, 8};
    cfg.fit_from_k = 4;
    cfg.nu_list = {5};
    cfg.p_list = {2.0};
    cfg.side = 64;
    const fbp::SweepResult sweep =
        fbp::sweep_approximation(fbp::unit_disk_phantom(1.0), cfg);
    REQUIRE(sweep.records.size() == 3);
    for (const fbp::ExperimentRecord& r : sweep.records) {
        CHECK(r.kind == "approx");
        CHECK(r.error > 0.0);
        CHECK(r.L == doctest::Approx(r.k * kPi).epsilon(1e-12));
    }
    REQUIRE(sweep.slopes.count(fbp::SeriesKey{5, 2.0}) == 1);
    CHECK(sweep.slopes.at(fbp::SeriesKey{5, 2.0}).slope < 0.0);
}

TEST_CASE("data-error sweep records realized noise levels and grows with L") {
    fbp::SweepConfig cfg;
    cfg.k_list = {4, 8, 16};
    cfg.fit_from_k = 4;
    cfg.nu_list = {5};
    cfg.p_list = {2.0};
    cfg.side = 64;
    fbp::NoiseSpec spec;
    spec.relative_level = 0.1;
    spec.seed = 9;
    const fbp::SweepResult sweep =
        fbp::sweep_data_error(fbp::unit_disk_phantom(0.0), cfg, spec, 2);
    REQUIRE(sweep.records.size() == 3);
    for (const fbp::ExperimentRecord& r : sweep.records) {
        CHECK(r.kind == "data");
        CHECK(r.delta > 0.0);
        CHECK(r.trials == 2);
    }
    CHECK(sweep.records[0].error < sweep.records[2].error);
    CHECK(sweep.slopes.at(fbp::SeriesKey{5, 2.0}).slope > 0.0);
}

#include "fbp/filters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fbp/quadrature.hpp"

namespace fbp {

namespace {
constexpr double kPi = std::numbers::pi;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }
}  // namespace

Window Window::hamming(double beta) {
    if (beta < 0.5 || beta > 1.0)
        throw std::invalid_argument("Hamming beta must lie in [1/2, 1]");
    Window w{WindowKind::Hamming};
    w.beta = beta;
    return w;
}

Window Window::smooth(int nu) {
    if (nu < 0) throw std::invalid_argument("Smooth window order must be >= 0");
    Window w{WindowKind::Smooth};
    w.nu = nu;
    return w;
}

std::string Window::label() const {
    switch (kind) {
        case WindowKind::RamLak: return "ram-lak";
        case WindowKind::SheppLogan: return "shepp-logan";
        case WindowKind::Cosine: return "cosine";
        case WindowKind::Hamming: return "hamming(" + std::to_string(beta) + ")";
        case WindowKind::Smooth: return "smooth(" + std::to_string(nu) + ")";
    }
    return "?";
}

double window_value(const Window& w, double S) {
    const double a = std::abs(S);
    if (a > 1.0) return 0.0;
    switch (w.kind) {
        case WindowKind::RamLak: return 1.0;
        case WindowKind::SheppLogan: return sinc(kPi * S / 2.0);
        case WindowKind::Cosine: return std::cos(kPi * S / 2.0);
        case WindowKind::Hamming:
            return w.beta + (1.0 - w.beta) * std::cos(kPi * S);
        case WindowKind::Smooth: {
            const double t = 1.0 - S * S;
            return w.nu == 0 ? 1.0 : std::pow(t, w.nu);
        }
    }
    return 0.0;
}

double Filter::value(double S) const {
    return std::abs(S) * window_value(window, S / L);
}

double bessel_j(int order, double t) {
    if (order < 0) throw std::invalid_argument("bessel_j: order must be >= 0");
    // The integrand extends to an even 2 pi-periodic function, so the
    // trapezoidal rule converges spectrally; node count grows with the
    // oscillation content |t| + order.
    const int K = static_cast<int>(0.8 * (std::abs(t) + order)) + 50;
    const double h = kPi / K;
    double acc = 0.5 * (std::cos(0.0) + std::cos(t * std::sin(kPi) - order * kPi));
    for (int i = 1; i < K; ++i) {
        const double phi = i * h;
        acc += std::cos(t * std::sin(phi) - order * phi);
    }
    return acc * h / kPi;
}

namespace {

// J_order(r) / r^order evaluated stably near r = 0, where dividing the
// integral-representation value (absolute error ~1e-15) by a high power
// of r would amplify rounding noise into a non-integrable artifact. The
// power series in r^2 has no such amplification; beyond the switch point
// the direct quotient is accurate because r^order is no longer small.
double bessel_j_scaled(int order, double r) {
    if (r > 10.0) return bessel_j(order, r) / std::pow(r, order);
    double term = 1.0;
    for (int i = 1; i <= order; ++i) term /= 2.0 * i;
    double sum = term;
    const double x = 0.25 * r * r;
    for (int m = 1; m <= 40; ++m) {
        term *= -x / (m * (m + order));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// (1/pi) int_0^L S W(S/L) cos(S s) dS with panel count resolving the
// oscillation; throws if doubling the panels moves the result.
double inv_fourier_quadrature(const Filter& f, double s) {
    const auto integrand = [&](double S) {
        return S * window_value(f.window, S / f.L) * std::cos(S * s);
    };
    const int panels =
        static_cast<int>(std::ceil(f.L * std::abs(s) / kPi)) + 4;
    const double coarse = gauss16_composite(integrand, 0.0, f.L, panels) / kPi;
    const double fine =
        gauss16_composite(integrand, 0.0, f.L, 2 * panels) / kPi;
    const double err = std::abs(fine - coarse);
    if (err > 1e-8 * std::max(1.0, std::abs(fine)))
        throw std::runtime_error(
            "inv_fourier_filter quadrature did not converge; error estimate " +
            std::to_string(err));
    return fine;
}

// 1F2(1; 1/2, nu+2; -z) * L^2 / (2 pi (nu+1)) with z = (L s / 2)^2;
// truncated series with term-ratio stopping.
double inv_fourier_smooth_series(int nu, double L, double s) {
    const double x = -0.25 * (L * s) * (L * s);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 500; ++k) {
        term *= x / ((0.5 + k) * (nu + 2.0 + k));
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    }
    return L * L / (2.0 * kPi * (nu + 1.0)) * sum;
}

}  // namespace

double inv_fourier_filter(const Filter& f, double s) {
    if (f.window.kind == WindowKind::Smooth) {
        // The alternating series cancels catastrophically for large |L s|;
        // switch to direct oscillatory quadrature there. The two paths are
        // cross-checked on the overlap in the test suite.
        if (std::abs(f.L * s) <= 12.0)
            return inv_fourier_smooth_series(f.window.nu, f.L, s);
    }
    return inv_fourier_quadrature(f, s);
}

namespace {

// Integrates |f| over [a,b] by locating the sign changes of f on a scan
// grid (bisection refinement) and applying Gauss-Legendre between them.
template <typename F>
double integrate_abs(F&& f, double a, double b, double scan_step) {
    std::vector<double> nodes{a};
    double prev_x = a;
    double prev_f = f(a);
    const int steps = static_cast<int>(std::ceil((b - a) / scan_step));
    for (int i = 1; i <= steps; ++i) {
        const double x = std::min(a + i * scan_step, b);
        const double fx = f(x);
        if ((prev_f < 0.0) != (fx < 0.0)) {
            double lo = prev_x, hi = x, flo = prev_f;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if ((flo < 0.0) != (fm < 0.0)) hi = mid;
                else { lo = mid; flo = fm; }
            }
            nodes.push_back(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_f = fx;
    }
    nodes.push_back(b);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const int panels =
            std::max(1, static_cast<int>((nodes[i + 1] - nodes[i]) / 2.0));
        acc += std::abs(gauss16_composite(f, nodes[i], nodes[i + 1], panels));
    }
    return acc;
}

}  // namespace

QuadResult l1_norm_inv_fourier(const Filter& f) {
    if (f.window.kind != WindowKind::Smooth)
        throw std::domain_error(
            "l1_norm_inv_fourier: only Smooth windows are supported");
    const int nu = f.window.nu;
    if (nu == 0)
        throw std::domain_error(
            "l1_norm_inv_fourier: divergent for nu = 0 (F^-1 A not in L1)");
    const Filter unit{f.window, 1.0};
    const auto g = [&](double s) { return inv_fourier_filter(unit, s); };
    const double R = 60.0;
    const double head = integrate_abs(g, 0.0, R, 0.25);
    // Endpoint asymptotics of the |S| kink at 0 give
    // |F^-1 A(s)| ~ (1/pi)(1/s^2 + 6 nu / s^4) without sign changes, so the
    // tail integrates in closed form.
    const double tail = (1.0 / kPi) * (1.0 / R + 2.0 * nu / (R * R * R));
    QuadResult res;
    res.value = 2.0 * (head + tail);
    res.error = (1.0 / kPi) * 30.0 * nu * nu / std::pow(R, 5.0);
    return res;
}

double kernel_value(const RadialKernel& k, double r) {
    if (r < 0.0) throw std::invalid_argument("kernel_value: r must be >= 0");
    const double L = k.L;
    if (k.window.kind == WindowKind::Smooth) {
        const int nu = k.window.nu;
        const double u = L * r;
        return L * L / (2.0 * kPi) * std::pow(2.0, nu) * std::tgamma(nu + 1.0) *
               bessel_j_scaled(nu + 1, u);
    }
    // Numeric Hankel transform (1/2pi) int_0^L W(S/L) J_0(S r) S dS.
    const auto integrand = [&](double S) {
        return window_value(k.window, S / L) * bessel_j(0, S * r) * S;
    };
    const int panels = static_cast<int>(std::ceil(L * (1.0 + r) / kPi)) + 4;
    return gauss16_composite(integrand, 0.0, L, panels) / (2.0 * kPi);
}

AlphaConstant kernel_alpha_constant(int nu, double alpha) {
    if (nu < 0 || alpha < 0.0)
        throw std::invalid_argument("kernel_alpha_constant: bad arguments");
    AlphaConstant res;
    if (nu <= alpha + 0.5) {
        res.divergent = true;
        res.reason = "nu <= alpha + 1/2";
        return res;
    }
    const double prefactor = std::pow(2.0, nu) * std::tgamma(nu + 1.0);
    // |J_{nu+1}(r)| r^(alpha-nu) = |J_{nu+1}(r)/r^(nu+1)| r^(alpha+1).
    const auto f = [&](double r) {
        return std::abs(bessel_j_scaled(nu + 1, r)) * std::pow(r, alpha + 1.0);
    };
    const double R = 400.0;
    const double head = integrate_abs(f, 1e-12, R, 0.5);
    // Tail from the sqrt(2/(pi r)) envelope with mean |cos| = 2/pi.
    const double tail = std::sqrt(2.0 / kPi) * (2.0 / kPi) *
                        std::pow(R, alpha - nu + 0.5) / (nu - alpha - 0.5);
    res.value = prefactor * (head + tail);
    return res;
}

double kernel_moment(int nu, int j1, int j2) {
    const int order = j1 + j2;
    if (order < 1)
        throw std::invalid_argument("kernel_moment: need j1 + j2 >= 1");
    if (!(nu > order - 0.5))
        throw std::domain_error(
            "kernel_moment: radial integral requires nu > j1 + j2 - 1/2");
    // Angular factor int_0^2pi cos^j1 sin^j2: zero unless both exponents
    // are even, else 2 pi (j1-1)!!(j2-1)!!/(j1+j2)!!.
    if (j1 % 2 != 0 || j2 % 2 != 0) return 0.0;
    auto dfact = [](int n) {
        double v = 1.0;
        for (int i = n; i > 1; i -= 2) v *= i;
        return v;
    };
    const double angular =
        2.0 * kPi * dfact(j1 - 1) * dfact(j2 - 1) / dfact(order);
    const auto f = [&](double r) {
        return bessel_j_scaled(nu + 1, r) * std::pow(r, order + 1.0);
    };
    const double R = 400.0;
    double radial = 0.0;
    // Signed integral, summed between Bessel zeros for stability.
    {
        std::vector<double> nodes{1e-12};
        double prev_x = 1e-12, prev_f = f(prev_x);
        const int steps = static_cast<int>(R / 0.5);
        for (int i = 1; i <= steps; ++i) {
            const double x = i * 0.5;
            const double fx = f(x);
            if ((prev_f < 0.0) != (fx < 0.0)) {
                double lo = prev_x, hi = x, flo = prev_f;
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = f(mid);
                    if ((flo < 0.0) != (fm < 0.0)) hi = mid;
                    else { lo = mid; flo = fm; }
                }
                nodes.push_back(0.5 * (lo + hi));
            }
            prev_x = x;
            prev_f = fx;
        }
        nodes.push_back(R);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            radial += gauss16_composite(
                f, nodes[i], nodes[i + 1],
                std::max(1, static_cast<int>((nodes[i + 1] - nodes[i]) / 2.0)));
    }
    return std::pow(2.0, nu) * std::tgamma(nu + 1.0) / (2.0 * kPi) * angular *
           radial;
}

}  // namespace fbp

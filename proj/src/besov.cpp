#include "fbp/besov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fbp/grid.hpp"
#include "fbp/phantom.hpp"
#include "fbp/quadrature.hpp"

namespace fbp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
}  // namespace

Field image_field(const Image& img) {
    return [img](double x, double y) {
        const int side = img.side;
        const double px = (x + 1.0) * side / 2.0 - 0.5;
        const double py = (y + 1.0) * side / 2.0 - 0.5;
        if (px < 0.0 || py < 0.0 || px > side - 1 || py > side - 1) return 0.0;
        int ix = std::min(static_cast<int>(px), side - 2);
        int iy = std::min(static_cast<int>(py), side - 2);
        const double u = px - ix, v = py - iy;
        return (1 - u) * (1 - v) * img.at(ix, iy) +
               u * (1 - v) * img.at(ix + 1, iy) +
               (1 - u) * v * img.at(ix, iy + 1) +
               u * v * img.at(ix + 1, iy + 1);
    };
}

Field phantom_field(const Phantom& phantom) {
    return [phantom](double x, double y) { return phantom.evaluate(x, y); };
}

namespace {

// ||f(.-X,.-Y) - f||_Lp on a grid covering the union of the supports.
double shift_diff_norm(const Field& f, double p, double X, double Y,
                       int side) {
    const double x_lo = -1.0 + std::min(0.0, X), x_hi = 1.0 + std::max(0.0, X);
    const double y_lo = -1.0 + std::min(0.0, Y), y_hi = 1.0 + std::max(0.0, Y);
    const double hx = (x_hi - x_lo) / side;
    const double hy = (y_hi - y_lo) / side;
    double acc = 0.0;
    for (int iy = 0; iy < side; ++iy) {
        const double y = y_lo + (iy + 0.5) * hy;
        for (int ix = 0; ix < side; ++ix) {
            const double x = x_lo + (ix + 0.5) * hx;
            const double diff = std::abs(f(x - X, y - Y) - f(x, y));
            if (p == kInf) acc = std::max(acc, diff);
            else if (p == 1.0) acc += diff;
            else if (p == 2.0) acc += diff * diff;
            else acc += std::pow(diff, p);
        }
    }
    if (p == kInf) return acc;
    return std::pow(acc * hx * hy, 1.0 / p);
}

}  // namespace

double modulus_of_continuity(const Field& f, double p, double delta,
                             const ModulusOptions& opts) {
    if (delta <= 0.0)
        throw std::invalid_argument("modulus_of_continuity: delta must be > 0");
    if (p < 1.0) throw std::invalid_argument("p must be >= 1");
    // Directions come in antipodal pairs with equal norms, so half suffice.
    const int half = std::max(1, opts.directions / 2);
    double best = 0.0;
    for (int i = 0; i < half; ++i) {
        const double phi = 2.0 * kPi * i / opts.directions;
        best = std::max(best,
                        shift_diff_norm(f, p, delta * std::cos(phi),
                                        delta * std::sin(phi), opts.grid_side));
    }
    return best;
}

double field_lp_norm(const Field& f, double p, const ModulusOptions& opts) {
    if (p < 1.0) throw std::invalid_argument("p must be >= 1");
    const int side = opts.grid_side;
    const double h = 2.0 / side;
    double acc = 0.0;
    for (int iy = 0; iy < side; ++iy) {
        const double y = -1.0 + (iy + 0.5) * h;
        for (int ix = 0; ix < side; ++ix) {
            const double v = std::abs(f(-1.0 + (ix + 0.5) * h, y));
            if (p == kInf) acc = std::max(acc, v);
            else if (p == 1.0) acc += v;
            else if (p == 2.0) acc += v * v;
            else acc += std::pow(v, p);
        }
    }
    if (p == kInf) return acc;
    return std::pow(acc * h * h, 1.0 / p);
}

namespace {

struct ThetaSeminorm {
    double value;
    double tail;  // q-th power contribution of the analytic t > t_max part
};

ThetaSeminorm seminorm_order_theta(const Field& f, double theta, double p,
                                   double q, const BesovOptions& opts) {
    const int n = opts.t_points;
    std::vector<double> u(n), omega(n);
    const double u_lo = std::log(opts.t_min), u_hi = std::log(opts.t_max);
    for (int i = 0; i < n; ++i) {
        u[i] = u_lo + (u_hi - u_lo) * i / (n - 1);
        omega[i] = modulus_of_continuity(f, p, std::exp(u[i]), opts.modulus);
    }
    ThetaSeminorm out{0.0, 0.0};
    if (q == kInf) {
        for (int i = 0; i < n; ++i)
            out.value = std::max(out.value, std::exp(-theta * u[i]) * omega[i]);
        return out;
    }
    // Trapezoid on the log axis for the head, constant bound
    // omega <= 2||f||_p for the tail.
    double integral = 0.0;
    auto h = [&](int i) {
        return std::pow(std::exp(-theta * u[i]) * omega[i], q);
    };
    for (int i = 0; i + 1 < n; ++i)
        integral += 0.5 * (h(i) + h(i + 1)) * (u[i + 1] - u[i]);
    const double fnorm = field_lp_norm(f, p, opts.modulus);
    out.tail = std::pow(2.0 * fnorm, q) * std::pow(opts.t_max, -theta * q) /
               (theta * q);
    out.value = std::pow(integral + out.tail, 1.0 / q);
    return out;
}

double factorial(int n) {
    double v = 1.0;
    for (int i = 2; i <= n; ++i) v *= i;
    return v;
}

}  // namespace

BesovEstimate besov_seminorm(const Phantom& phantom, double alpha, double p,
                             double q, const BesovOptions& opts) {
    if (alpha <= 0.0 || alpha == std::floor(alpha))
        throw std::invalid_argument(
            "besov_seminorm: alpha must be positive and non-integer");
    const int n = static_cast<int>(std::floor(alpha));
    const double theta = alpha - n;
    if (n >= 1 && phantom.max_derivative_order() < n)
        throw std::domain_error(
            "besov_seminorm: phantom lacks order-" + std::to_string(n) +
            " derivatives required for alpha > 1");

    BesovEstimate est;
    est.alpha = alpha;
    est.p = p;
    est.q = q;
    est.t_min = opts.t_min;
    est.t_max = opts.t_max;
    est.t_points = opts.t_points;
    est.grid_side = opts.modulus.grid_side;
    est.directions = opts.modulus.directions;

    if (n == 0) {
        const auto s = seminorm_order_theta(phantom_field(phantom), theta, p,
                                            q, opts);
        est.value = s.value;
        est.tail_contribution = s.tail;
        return est;
    }
    for (int j1 = 0; j1 <= n; ++j1) {
        const int j2 = n - j1;
        const double weight = factorial(n) / (factorial(j1) * factorial(j2));
        Field deriv = [&phantom, j1, j2](double x, double y) {
            return phantom.partial_derivative(j1, j2, x, y);
        };
        const auto s = seminorm_order_theta(deriv, theta, p, q, opts);
        est.value += weight * s.value;
        est.tail_contribution += weight * s.tail;
    }
    return est;
}

double constant_c_alpha_q(double alpha, double q) {
    if (alpha <= 0.0 || alpha >= 1.0)
        throw std::invalid_argument("constant_c_alpha_q: need 0 < alpha < 1");
    if (q == kInf) return 1.0;
    if (q < 1.0) throw std::invalid_argument("q must be >= 1");
    return std::pow(2.0 * std::numbers::e * alpha * q, 1.0 / q);
}

IncreasingFunction IncreasingFunction::steps(std::vector<double> t,
                                             std::vector<double> v) {
    if (t.size() != v.size() || t.empty())
        throw std::invalid_argument("steps: breakpoint/value size mismatch");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] <= 0.0 || (i > 0 && t[i] <= t[i - 1]))
            throw std::invalid_argument("steps: breakpoints must be positive "
                                        "and strictly increasing");
        if (v[i] < 0.0 || (i > 0 && v[i] < v[i - 1]))
            throw std::invalid_argument("steps: values must be non-negative "
                                        "and non-decreasing");
    }
    IncreasingFunction g;
    g.t_ = std::move(t);
    g.v_ = std::move(v);
    return g;
}

IncreasingFunction IncreasingFunction::analytic(
    std::function<double(double)> f, double t_converged) {
    IncreasingFunction g;
    g.f_ = std::move(f);
    g.t_converged_ = t_converged;
    return g;
}

double IncreasingFunction::operator()(double t) const {
    if (f_) return f_(t);
    auto it = std::upper_bound(t_.begin(), t_.end(), t);
    if (it == t_.begin()) return 0.0;
    return v_[static_cast<std::size_t>(it - t_.begin()) - 1];
}

double IncreasingFunction::weighted_lq(double alpha, double q) const {
    if (alpha <= 0.0 || q < 1.0)
        throw std::invalid_argument("weighted_lq: need alpha > 0, q >= 1");
    const double aq = alpha * q;
    if (!f_) {
        // Exact segment-wise integration of the step function.
        double acc = 0.0;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (v_[i] == 0.0) continue;
            const double upper =
                (i + 1 < t_.size()) ? std::pow(t_[i + 1], -aq) : 0.0;
            acc += std::pow(v_[i], q) * (std::pow(t_[i], -aq) - upper) / aq;
        }
        return std::pow(acc, 1.0 / q);
    }
    // Log-axis quadrature for the head, analytic tail where g has
    // converged to its limit.
    const double T = t_converged_;
    const auto integrand = [&](double u) {
        const double t = std::exp(u);
        return std::pow(std::exp(-alpha * u) * f_(t), q);
    };
    const double head = adaptive_simpson(integrand, std::log(1e-12),
                                         std::log(T), 1e-12);
    const double tail = std::pow(f_(T), q) * std::pow(T, -aq) / aq;
    return std::pow(head + tail, 1.0 / q);
}

double IncreasingFunction::weighted_sup(double alpha) const {
    if (!f_) {
        // t^-alpha decreases, so each segment's sup sits at its left edge.
        double best = 0.0;
        for (std::size_t i = 0; i < t_.size(); ++i)
            best = std::max(best, v_[i] * std::pow(t_[i], -alpha));
        return best;
    }
    double best = 0.0;
    const int n = 40000;
    const double u_lo = std::log(1e-10), u_hi = std::log(t_converged_);
    for (int i = 0; i <= n; ++i) {
        const double u = u_lo + (u_hi - u_lo) * i / n;
        best = std::max(best, std::exp(-alpha * u) * f_(std::exp(u)));
    }
    return best;
}

double IncreasingFunction::value_at_infinity() const {
    if (!f_) return v_.back();
    return f_(t_converged_);
}

LemmaCheck verify_lemma_embedding_p(const IncreasingFunction& g, double alpha,
                                    double p, double q, double c) {
    if (!(1.0 <= q && q < p) || p == kInf)
        throw std::invalid_argument("need 1 <= q < p < inf");
    if (c <= 1.0) throw std::invalid_argument("need c > 1");
    LemmaCheck res;
    res.lhs = g.weighted_lq(alpha, p);
    res.rhs = std::pow(c, 2.0 * alpha) *
              std::pow(std::log(c), 1.0 / p - 1.0 / q) *
              g.weighted_lq(alpha, q);
    res.holds = res.lhs <= res.rhs * (1.0 + 1e-12) + 1e-300;
    return res;
}

LemmaCheck verify_lemma_embedding_inf(const IncreasingFunction& g,
                                      double alpha, double q, double c) {
    if (q < 1.0 || q == kInf) throw std::invalid_argument("need 1 <= q < inf");
    if (c <= 1.0) throw std::invalid_argument("need c > 1");
    LemmaCheck res;
    res.lhs = g.weighted_sup(alpha);
    res.rhs = std::pow(c, 2.0 * alpha) * std::pow(std::log(c), -1.0 / q) *
              g.weighted_lq(alpha, q);
    res.holds = res.lhs <= res.rhs * (1.0 + 1e-12) + 1e-300;
    return res;
}

LimitCheck verify_lemma_limit(const IncreasingFunction& g, double q,
                              double rel_tol) {
    if (q < 1.0 || q == kInf) throw std::invalid_argument("need 1 <= q < inf");
    LimitCheck res;
    const double alphas[] = {0.1, 0.05, 0.025, 0.0125};
    for (double a : alphas)
        res.samples.push_back(std::pow(a * q, 1.0 / q) *
                              g.weighted_lq(a, q));
    // Richardson extrapolation on the observed order of the alpha error.
    const auto& s = res.samples;
    const double d2 = s[2] - s[1];
    const double d3 = s[3] - s[2];
    double limit = s[3];
    if (d2 != 0.0) {
        const double ratio = d3 / d2;
        if (ratio > 0.0 && ratio < 1.0) limit = s[3] + d3 * ratio / (1.0 - ratio);
    }
    res.limit_estimate = limit;
    res.g_at_infinity = g.value_at_infinity();
    const double scale = std::max(std::abs(res.g_at_infinity), 1e-12);
    res.match = std::abs(res.limit_estimate - res.g_at_infinity) <=
                rel_tol * scale;
    return res;
}

}  // namespace fbp

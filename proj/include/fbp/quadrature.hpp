#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace fbp {

// Nodes and weights of the 16-point Gauss-Legendre rule on [-1,1]
// (positive half; the rule is symmetric).
namespace detail {
inline constexpr double gl16_x[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
inline constexpr double gl16_w[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};
}  // namespace detail

// 16-point Gauss-Legendre quadrature on [a,b].
template <typename F>
double gauss16(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * detail::gl16_x[i];
        acc += detail::gl16_w[i] * (f(c - dx) + f(c + dx));
    }
    return acc * h;
}

// Composite 16-point Gauss-Legendre with n equal panels.
template <typename F>
double gauss16_composite(F&& f, double a, double b, int panels) {
    if (panels < 1) panels = 1;
    const double h = (b - a) / panels;
    double acc = 0.0;
    for (int i = 0; i < panels; ++i)
        acc += gauss16(f, a + i * h, a + (i + 1) * h);
    return acc;
}

// Adaptive Simpson quadrature. Handles integrands with isolated jumps by
// recursive bisection; depth is capped to keep runaway recursions bounded.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-10, int max_depth = 48);

}  // namespace fbp

#pragma once

#include <string>

namespace fbp {

// Fourier convention used throughout: forward transform without prefactor,
// F g(S) = int g(t) exp(-i t S) dt, inverse with 1/(2 pi). All closed forms
// below assume this convention.

enum class WindowKind { RamLak, SheppLogan, Cosine, Hamming, Smooth };

// Even window on [-1,1] with W(0) = 1 and W = 0 outside.
struct Window {
    WindowKind kind = WindowKind::RamLak;
    double beta = 0.54;  // Hamming only, in [1/2, 1]
    int nu = 0;          // Smooth only, nu >= 0

    static Window ram_lak() { return {WindowKind::RamLak}; }
    static Window shepp_logan() { return {WindowKind::SheppLogan}; }
    static Window cosine() { return {WindowKind::Cosine}; }
    static Window hamming(double beta);
    static Window smooth(int nu);

    std::string label() const;
};

double window_value(const Window& w, double S);

// Low-pass filter A_L(S) = |S| W(S/L).
struct Filter {
    Window window;
    double L = 1.0;

    double value(double S) const;
};

// Radial profile of the convolution kernel K_L(x,y) = k(||(x,y)||) with
// F K_L = W(||.||/L). Smooth windows use the closed Bessel form; Table-1
// windows fall back to a numeric Hankel transform.
struct RadialKernel {
    Window window;
    double L = 1.0;
};

// J_order(t) through the integral representation
// (1/pi) int_0^pi cos(t sin phi - order*phi) dphi, order >= 0.
double bessel_j(int order, double t);

// F^-1 A_L(s). Smooth windows use the 1F2 series for small L*s and
// oscillatory quadrature otherwise; Table-1 windows use quadrature only.
// Throws if the two-resolution quadrature check fails to converge.
double inv_fourier_filter(const Filter& f, double s);

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimate of the neglected tail / quadrature error
};

// ||F^-1 A||_L1(R) for the unit-bandwidth filter A = A_1 of a Smooth
// window with nu >= 1 (the norm for A_L is L times this value).
// Throws std::domain_error for nu = 0, where F^-1 A is not integrable.
QuadResult l1_norm_inv_fourier(const Filter& f);

double kernel_value(const RadialKernel& k, double r);

struct AlphaConstant {
    bool divergent = false;
    double value = 0.0;
    std::string reason;
};

// I_{alpha,nu} = 2^nu Gamma(nu+1) int_0^inf |J_{nu+1}(r)| r^(alpha-nu) dr,
// finite exactly when nu > alpha + 1/2; reports divergence otherwise.
AlphaConstant kernel_alpha_constant(int nu, double alpha);

// int x^j1 y^j2 K_nu(x,y) d(x,y) for the unit-bandwidth smooth kernel:
// closed-form angular factor times a numeric radial Bessel integral.
// Requires j1 + j2 >= 1 and nu > j1 + j2 - 1/2.
double kernel_moment(int nu, int j1, int j2);

}  // namespace fbp

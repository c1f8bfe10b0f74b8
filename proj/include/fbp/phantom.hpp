#pragma once

#include <string>
#include <vector>

namespace fbp {

// Affine map sending an ellipse (semi-axes a, b, center (h, k), rotation
// phi) onto the closed unit disk.
struct EllipseMap {
    double a = 1.0;   // semi-axis along the rotated x-direction
    double b = 1.0;   // semi-axis along the rotated y-direction
    double h = 0.0;   // center x
    double k = 0.0;   // center y
    double phi = 0.0; // rotation angle in radians

    // Maps (x,y) into unit-disk coordinates (u,v).
    void to_disk(double x, double y, double& u, double& v) const;
};

// One ellipse-shaped bump: weight * p_sigma(map(x,y)) with the radial
// profile p_sigma(u,v) = (1 - u^2 - v^2)^sigma inside the unit disk,
// 0 outside. sigma = 0 gives the characteristic function.
struct PhantomComponent {
    EllipseMap map;
    double weight = 1.0;
    double sigma = 0.0;
};

// Weighted sum of ellipse-mapped profile components, supported in the
// closed unit disk.
struct Phantom {
    std::vector<PhantomComponent> components;
    std::string name;

    double evaluate(double x, double y) const;

    // Exact line integral over the line with normal angle theta in [0,pi)
    // and signed distance t to the origin.
    double radon(double t, double theta) const;

    // Analytic partial derivative d^(j1+j2) f / dx^j1 dy^j2. Requires
    // every component to have sigma >= j1 + j2.
    double partial_derivative(int j1, int j2, double x, double y) const;

    // Largest derivative order available classically, min_j floor(sigma_j).
    int max_derivative_order() const;
};

// Radon transform of the unit-disk profile p_sigma along a line at signed
// distance t: (1-t^2)^(sigma+1/2) * sqrt(pi)*Gamma(sigma+1)/Gamma(sigma+3/2).
double radon_profile(double sigma, double t);

// The standard ten-ellipse Shepp-Logan parameter set (original intensity
// values).
Phantom shepp_logan_phantom();

// Variant with a thickened skull (inner ellipse 0.55 x 0.72): the standard
// skull annulus is thinner than the reconstruction kernel's main lobe for
// every moderate bandwidth, so convergence-rate sweeps use this variant.
Phantom shepp_logan_desk_phantom();

// Three ellipse-mapped p_sigma bumps with weights (1, -3/2, 3/2);
// in B^{alpha,p}_p for alpha < sigma + 1/p.
Phantom smooth_phantom(double sigma);

// Single unit-disk component of profile order sigma and weight 1.
Phantom unit_disk_phantom(double sigma = 0.0);

// Resolves "shepp-logan", "shepp-logan-desk", "unit-disk" and
// "smooth:<sigma>"; throws on unknown names.
Phantom builtin_phantom(const std::string& name);

}  // namespace fbp

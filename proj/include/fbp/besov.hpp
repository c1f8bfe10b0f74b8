#pragma once

#include <functional>
#include <vector>

namespace fbp {

struct Phantom;
struct Image;

using Field = std::function<double(double, double)>;

// Adapts an Image on [-1,1]^2 to a plane field via bilinear interpolation,
// zero outside the pixel grid.
Field image_field(const Image& img);
Field phantom_field(const Phantom& phantom);

struct ModulusOptions {
    int grid_side = 512;  // evaluation grid per axis
    int directions = 16;  // shift directions on the circle of radius delta
};

// Estimate of sup_{||(X,Y)|| <= delta} ||f(.-X,.-Y) - f||_Lp for a field
// supported in the unit disk. The sup over the disk of shifts is taken as
// the max over equispaced directions at radius delta; for the
// shift-monotone phantom family the sup is attained on the boundary.
double modulus_of_continuity(const Field& f, double p, double delta,
                             const ModulusOptions& opts = {});

// Discrete L^p norm of a compactly supported field (support radius <= 1).
double field_lp_norm(const Field& f, double p, const ModulusOptions& opts = {});

struct BesovEstimate {
    double alpha = 0.0;
    double p = 2.0;
    double q = 2.0;
    double value = 0.0;
    // estimator metadata
    double t_min = 0.0;
    double t_max = 0.0;
    int t_points = 0;
    int grid_side = 0;
    int directions = 0;
    double tail_contribution = 0.0;  // analytic t > t_max part (q-th power)
};

struct BesovOptions {
    ModulusOptions modulus;
    double t_min = 1e-4;
    double t_max = 8.0;
    int t_points = 64;
};

// Besov semi-norm estimate |f|_{B^{alpha,p}_q}. For alpha = n + theta with
// n >= 1 the estimate is the multinomially weighted sum of order-theta
// semi-norms of the n-th partial derivatives; requires the phantom to
// support those derivatives. alpha must be positive and non-integer.
BesovEstimate besov_seminorm(const Phantom& phantom, double alpha, double p,
                             double q, const BesovOptions& opts = {});

// (2 e alpha q)^(1/q) for finite q, 1 for q = inf; 0 < alpha < 1 required.
double constant_c_alpha_q(double alpha, double q);

// Increasing function g: [0, inf) -> [0, inf), either a right-continuous
// step function (integrals evaluated exactly) or an analytic callable
// (adaptive quadrature on the log axis, analytic tail beyond t_converged).
class IncreasingFunction {
  public:
    static IncreasingFunction steps(std::vector<double> t,
                                    std::vector<double> v);
    static IncreasingFunction analytic(std::function<double(double)> f,
                                       double t_converged = 100.0);

    double operator()(double t) const;
    // (int_0^inf (t^-alpha g(t))^q dt/t)^(1/q)
    double weighted_lq(double alpha, double q) const;
    // sup_{t>0} t^-alpha g(t)
    double weighted_sup(double alpha) const;
    double value_at_infinity() const;

  private:
    IncreasingFunction() = default;
    std::vector<double> t_, v_;  // step representation (empty if analytic)
    std::function<double(double)> f_;
    double t_converged_ = 100.0;
};

struct LemmaCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

// (int (t^-a g)^p dt/t)^(1/p) <= c^2a log(c)^(1/p-1/q) (int (t^-a g)^q dt/t)^(1/q)
// for 1 <= q < p < infinity and c > 1.
LemmaCheck verify_lemma_embedding_p(const IncreasingFunction& g, double alpha,
                                    double p, double q, double c);

// sup t^-a g <= c^2a log(c)^(-1/q) (int (t^-a g)^q dt/t)^(1/q), c > 1.
LemmaCheck verify_lemma_embedding_inf(const IncreasingFunction& g,
                                      double alpha, double q, double c);

struct LimitCheck {
    double limit_estimate = 0.0;
    double g_at_infinity = 0.0;
    bool match = false;
    std::vector<double> samples;  // values at the descending alpha grid
};

// lim_{alpha -> 0} (alpha q int (t^-alpha g)^q dt/t)^(1/q) = lim g(t);
// evaluated on alpha in {0.1, 0.05, 0.025, 0.0125} with Richardson
// extrapolation, matched against g(inf) within rel_tol.
LimitCheck verify_lemma_limit(const IncreasingFunction& g, double q,
                              double rel_tol = 0.02);

}  // namespace fbp

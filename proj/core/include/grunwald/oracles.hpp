#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "grunwald/types.hpp"

namespace grunwald {

/// One-sided (totally skewed) alpha-stable density with Laplace transform
/// e^{-t s^alpha}, 0 < alpha < 1, evaluated from the Zolotarev integral
/// representation.  Scaling g(t,x) = t^{-1/alpha} g(1, x t^{-1/alpha}) is
/// applied internally; x <= 0 returns 0.
double stable_density(double alpha, double t, double x);

/// Total mass int_0^inf g(t,x) dx computed as finite quadrature up to
/// x_split plus the convergent series tail (the x^{-1-alpha} tail carries
/// mass that no finite trapezoid can reach).
double stable_density_total_mass(double alpha, double t, double x_split = 30.0);

struct StableDensityTable {
    double alpha = 0.0;
    double t = 0.0;
    std::vector<double> x_grid;
    std::vector<double> values;
    double total_mass = 0.0; // quadrature + series tail
};

StableDensityTable make_stable_density_table(double alpha, double t,
                                             const std::vector<double>& x_grid);

/// Initial conditions of the half-line experiment: f(x) = x^mu on [0,1],
/// extended by zero for x < 0.
enum class Example1Initial { f1, f2, f3 };

double example1_mu(Example1Initial kind);

/// Exact solution u(t,x) = int_0^x g_alpha(t,s) f(x-s) ds of the fractional
/// Cauchy problem on the half line for power initial data f = x^mu.  The
/// f-singularity is removed analytically by the substitution y = (x-s)^{1+mu};
/// base_panels controls the initial panelization (double it for a Richardson
/// self-check).
std::vector<double> exact_solution_example1(double mu, double alpha, double t,
                                            const std::vector<double>& x_eval_grid,
                                            std::size_t base_panels = 64);

/// Generic bounded initial data (no endpoint singularity removal).
std::vector<double> exact_solution_example1(const std::function<double(double)>& f,
                                            double alpha, double t,
                                            const std::vector<double>& x_eval_grid,
                                            std::size_t base_panels = 64);

struct SpectralDerivative {
    GridFunction values;
    double max_imag_residue = 0.0; // dropped imaginary part of the inverse FFT
};

/// Riemann-Liouville fractional derivative on the line via the Fourier
/// multiplier (-ik)^alpha under the transform f^(k) = int e^{ikx} f(x) dx:
/// FFT, multiply, inverse FFT, plus an analytic moment-series correction for
/// the periodic images of the algebraically decaying derivative tail (the
/// correction vanishes identically at integer alpha).  Requires samples that
/// have decayed below 1e-14 at the grid ends.
SpectralDerivative spectral_fractional_derivative(const GridFunction& f, double alpha);

/// Riemann-Liouville derivative of x^mu with lower terminal 0:
/// Gamma(mu+1)/Gamma(mu+1-alpha) x^{mu-alpha}; requires mu > -1, mu-alpha > -1.
double rl_derivative_power(double mu, double alpha, double x);

/// Exact solution e^{-t} x^3 of the variable-coefficient test problem.
double tadjeran_exact(double x, double t);

} // namespace grunwald

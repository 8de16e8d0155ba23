#pragma once

#include <complex>
#include <cstddef>

#include "grunwald/schemes.hpp"
#include "grunwald/types.hpp"

namespace grunwald {

/// Shifted Grunwald multiplier symbol
/// psi^p_h(k) = (-1)^{q+1} h^{-alpha} e^{-ikhp} (1-e^{ikh})^alpha.
/// Satisfies the scaling identity psi^p_h(k) = h^{-alpha} psi^p_1(hk).
std::complex<double> psi_eval(const FracOrder& order, double h, double p, double k);

/// d/dk of psi^p_h(k) (analytic form; unbounded at k=0 when alpha < 1).
std::complex<double> psi_deriv(const FracOrder& order, double h, double p, double k);

/// Closed form of Re psi^p_1 on [0, pi]:
/// (-1)^{q+1} 2^alpha sin^alpha(k/2) cos((alpha/2 - p)k - alpha pi/2).
double psi_real_closed_form(const FracOrder& order, double p, double k);

/// Evaluatable combined symbol phi_h(k) = sum_j b_j psi^{p_j}_{c_j h}(k).
/// 2pi/h-periodic, conjugate symmetric, phi(0) = 0, and
/// phi_h(k) = h^{-alpha} phi_1(hk).
class SymbolFn {
  public:
    SymbolFn(Scheme scheme, double h);

    std::complex<double> operator()(double k) const;
    std::complex<double> derivative(double k) const;

    const Scheme& scheme() const { return scheme_; }
    double h() const { return h_; }
    double alpha() const { return scheme_.order.alpha(); }

    /// Same scheme at unit spacing (stability analysis happens at h=1).
    SymbolFn at_unit_spacing() const { return SymbolFn(scheme_, 1.0); }

  private:
    Scheme scheme_;
    double h_;
};

SymbolFn combined_symbol(const Scheme& s, double h);

/// Measured constants of the Theorem-4.1-type hypotheses, sampled over a
/// geometric-plus-uniform grid on (0, pi] at h=1.
struct StabilityReport {
    double C_bound = 0.0;      // sup |phi(k)| / k^alpha
    double Cprime_bound = 0.0; // sup |phi'(k)| / k^{alpha-1} (central differences)
    double c_coercivity = 0.0; // inf -Re phi(k) / k^alpha
    bool sign_change = false;  // true iff c_coercivity <= 0
    std::size_t k_grid_size = 0;
};

/// k_samples >= 1024 uniform points plus a geometric refinement toward k=0.
StabilityReport certify_stability(const SymbolFn& sym, std::size_t k_samples = 4096);

/// The unique integer q with |q - alpha/2| < 1/2 (alpha not an odd integer).
int optimal_shift(const FracOrder& order);

/// max_{0<=n<=N} |sum_j b_j a_{j,n} c_j^n - delta_{n,0}| -- the residual of
/// the scheme's Taylor cancellation through degree N.
double taylor_cancellation_check(const Scheme& s, std::size_t N);

} // namespace grunwald

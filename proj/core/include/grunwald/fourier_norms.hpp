#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "grunwald/symbols.hpp"

namespace grunwald {

using PeriodicFn = std::function<std::complex<double>(double)>;

/// Fourier coefficients a_k, k = -n/2 .. n/2-1, of a 2pi-periodic function,
/// computed by the n-point trapezoidal rule (equivalently, these are the
/// aliased coefficients sum_j a_{k+jn}).
struct FourierCoeffs {
    std::vector<std::complex<double>> values; // index k + n/2
    double t = 0.0;                           // time parameter of the family, if any
    std::size_t n = 0;
    bool converged = false;

    std::complex<double> a(long k) const {
        return values[static_cast<std::size_t>(k + static_cast<long>(n) / 2)];
    }
};

/// Fixed-size computation (no adaptivity); n must be a power of two >= 64.
FourierCoeffs periodic_fourier_coeffs_fixed(const PeriodicFn& g, std::size_t n,
                                            double t_meta = 0.0);

/// Adaptive computation: n doubles until either the boundary coefficients
/// drop below 1e-14 or the coefficient-modulus sum is stable to
/// stability_rel_tol across a doubling (the symbols handled here have
/// algebraically decaying, eventually one-signed tails for which the aliased
/// modulus sum converges long before the boundary criterion can fire).
/// Throws NonConvergent once n exceeds max_n.
FourierCoeffs periodic_fourier_coeffs(const PeriodicFn& g, std::size_t n_start = 1024,
                                      std::size_t max_n = (1u << 22), double t_meta = 0.0,
                                      double stability_rel_tol = 1e-11);

/// Exact L1 multiplier norm of the associated operator: sum_k |a_k|.
double l1_multiplier_norm(const FourierCoeffs& c);

/// Norms of T_{e^{t phi_h}} over a (t, h) grid.  The dependence collapses to
/// t/h^alpha, so everything is evaluated at h=1 with rescaled t.
struct NormScan {
    std::vector<double> t_grid, h_grid;
    std::vector<std::vector<double>> norms;                 // [i_t][j_h]
    std::vector<std::vector<double>> analyticity_products;  // t * ||T_{phi e^{t phi}}||, optional
    double K = 0.0;     // max norm entry
    double M_hat = 0.0; // max analyticity product (0 when not requested)
};

NormScan semigroup_norm_scan(const Scheme& s, const std::vector<double>& t_grid,
                             const std::vector<double>& h_grid,
                             bool with_analyticity = false);

/// t * ||T_{phi e^{t phi}}|| over a t grid at h=1, and its supremum M_hat.
struct AnalyticityScan {
    std::vector<double> t_grid;
    std::vector<double> products;
    double M_hat = 0.0;
};

AnalyticityScan analyticity_scan(const Scheme& s, const std::vector<double>& t_grid);

/// The four quantities of the Carlson-type bound for a periodic g:
/// sum|a_k|, |a_0|, ||g||_{L_r[-pi,pi]}, ||g'||_{L_r[-pi,pi]}.
struct CarlsonComparison {
    double coeff_sum = 0.0;
    double a0_abs = 0.0;
    double norm_g = 0.0;
    double norm_gprime = 0.0;
    double r = 2.0;

    /// (sum|a_k| - |a_0|) / (||g||^{1/s} ||g'||^{1/r}); NaN when g' == 0.
    double ratio() const;
};

CarlsonComparison carlson_bound_compare(const PeriodicFn& g, const PeriodicFn& gprime,
                                        double r);

} // namespace grunwald

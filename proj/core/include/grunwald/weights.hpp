#pragma once

#include <cstddef>
#include <vector>

#include "grunwald/types.hpp"

namespace grunwald {

/// Grunwald weights w_m = (-1)^m binom(alpha, m), m = 0..M, computed by the
/// recurrence w_0 = 1, w_m = w_{m-1} (m-1-alpha)/m (no Gamma evaluations).
std::vector<double> grunwald_weights(const FracOrder& order, std::size_t M);

/// Extended-precision entry point: lets callers that hold alpha as a decimal
/// string (the CLI) avoid the double-rounding of the widened double.
std::vector<double> grunwald_weights(long double alpha, std::size_t M);

/// Shifted Grunwald formula h^{-alpha} sum_m w_m f(x - (m-p)h) sampled on the
/// grid of f; out-of-domain samples read as zero.  p must be an integer here
/// (half-integer shifts are only reachable through scale-2 scheme terms).
/// truncation < 0 means "sum until the stencil leaves the grid".
GridFunction apply_shifted_grunwald(const GridFunction& f, const FracOrder& order,
                                    double p, long truncation = -1);

/// Combined scheme sum_j b_j A^alpha_{c_j h, p_j} f at the grid spacing of f.
GridFunction apply_scheme(const GridFunction& f, const Scheme& s);

} // namespace grunwald

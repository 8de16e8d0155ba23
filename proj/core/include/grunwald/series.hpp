#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "grunwald/types.hpp"

namespace grunwald {

/// Taylor coefficients a_0..a_N of omega_{p,alpha}(z) = ((1-e^{-z})/z)^alpha e^{zp}.
/// Always a_0 = 1 and a_1 = p - alpha/2.
struct OmegaSeries {
    double p = 0.0;
    double alpha = 0.0;
    std::vector<double> coeffs;
};

/// omega_{p,alpha}(z) on the principal branch (cut along the negative real
/// axis of the base (1-e^{-z})/z).  The singularity at z=0 is removable and
/// evaluates to 1.  Throws BranchCut when the base lies on the cut.
std::complex<double> omega_eval(double p, double alpha, std::complex<double> z);

/// Series coefficients through degree N via the power-series power recurrence
/// for ((1-e^{-z})/z)^alpha followed by a Cauchy product with exp(pz).
OmegaSeries omega_taylor(double p, double alpha, std::size_t N);

} // namespace grunwald

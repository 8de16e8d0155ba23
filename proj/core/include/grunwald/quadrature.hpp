#pragma once

#include <functional>
#include <vector>

#include "grunwald/errors.hpp"

namespace grunwald {

using RealFn = std::function<double(double)>;

/// Adaptive Simpson with Richardson acceleration.  A panel is accepted when
/// the local error estimate falls below the absolute tolerance or below
/// rel_tol times the local integral (the relative term keeps tall narrow
/// spikes from recursing into the roundoff floor).  Throws QuadratureFailure
/// when the recursion depth is exhausted far above tolerance.
double adaptive_simpson(const RealFn& f, double a, double b, double abs_tol,
                        int max_depth = 60, double rel_tol = 1e-12);

/// Adaptive Simpson over a pre-partitioned interval (the breaks isolate
/// known boundary layers so the coarse samples cannot miss them).
double adaptive_simpson_panels(const RealFn& f, const std::vector<double>& breaks,
                               double abs_tol, int max_depth = 60, double rel_tol = 1e-12);

} // namespace grunwald

#pragma once

#include <vector>

#include "grunwald/pde.hpp"
#include "grunwald/schemes.hpp"

namespace grunwald {

/// Consistency study: the scheme applied to Gaussian e^{-x^2} samples on
/// [-8,8] at h = 2^{-level}, L1 grid error against the spectral oracle.
/// levels must be strictly increasing (finer grids last).
ConvergenceTable consistency_study(const Scheme& s, const std::vector<std::size_t>& levels);

/// Error of a single consistency run at h = 2^{-level}.
double consistency_error(const Scheme& s, std::size_t level);

struct TadjeranStudy {
    ConvergenceTable table; // rows over the requested nx values
};

TadjeranStudy tadjeran_study(TadjeranScheme kind, const std::vector<std::size_t>& nxs,
                             TimeStepConfig cfg = {});

struct Example1Study {
    ConvergenceTable table;
    double oracle_self_error = 0.0; // Richardson check of the convolution oracle
};

/// Rates of the half-line experiment (alpha = 0.8) at t = 1.  The oracle is
/// evaluated once on the finest grid and restricted to the coarser, nested
/// grids; certify_oracle re-runs it at doubled resolution and records the
/// largest change.
Example1Study example1_study(Example1Initial kind, int scheme_order,
                             const std::vector<std::size_t>& nxs,
                             bool certify_oracle = false, TimeStepConfig cfg = {});

} // namespace grunwald

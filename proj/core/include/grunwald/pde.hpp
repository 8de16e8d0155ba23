#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "grunwald/linalg.hpp"
#include "grunwald/oracles.hpp"
#include "grunwald/schemes.hpp"
#include "grunwald/types.hpp"

namespace grunwald {

/// Time-dependent Dirichlet value; derivative optional (numeric fallback).
struct BoundaryValue {
    std::function<double(double)> value;
    std::function<double(double)> derivative; // may be empty
};

/// A fractional-in-space initial-boundary value problem
///   u_t = (-1)^{q+1} d(x) D^alpha u + source(x,t)
/// on [a,b], D^alpha the Riemann-Liouville derivative with lower terminal a
/// (zero extension left of a).
struct ProblemSpec {
    Scheme scheme;
    double a = 0.0, b = 1.0;
    std::function<double(double)> coeff;                    // d(x)
    std::function<double(double, double)> source;           // s(x, t), may be empty
    std::function<double(double)> initial;                  // u0(x)
    std::optional<BoundaryValue> left_bc, right_bc;
};

/// Dense method-of-lines operator over the nodes x_i = a + i dx, i = 0..nx.
/// Dirichlet rows are zeroed (the marchers impose the boundary data); interior
/// rows hold sign * d(x_i) * sum_j b_j (c_j dx)^{-alpha} w_m at columns
/// i - (m c_j - p_j c_j).
struct FracOperatorMatrix {
    DenseMatrix A;            // (nx+1) x (nx+1)
    double h = 0.0;           // dx
    Scheme scheme;
    std::vector<double> coeff; // d(x_i)
    double sign = 1.0;        // (-1)^{q+1}
    std::size_t nx = 0;
    bool dirichlet_left = false, dirichlet_right = false;
};

FracOperatorMatrix assemble_matrix(const ProblemSpec& p, std::size_t nx);

enum class TimeStepMethod { BackwardEuler, RK4 };

struct TimeStepConfig {
    TimeStepMethod method = TimeStepMethod::RK4;
    double tau = 0.0;        // 0 with RK4: auto (Richardson-refined)
    std::size_t n_steps = 0; // derived from tau and t_end when 0
};

struct MarchResult {
    std::vector<std::vector<double>> states; // states.front() = u0, .back() = u(t_end)
    double tau = 0.0;
    std::size_t n_steps = 0;
};

/// (I - tau A) u_{n+1} = u_n + tau s(t_{n+1}); one factorization reused
/// across all steps; boundary rows are identity rows with the boundary value
/// as right-hand side.  u0_override replaces p.initial when given.
MarchResult backward_euler_march(const FracOperatorMatrix& m, const ProblemSpec& p,
                                 const TimeStepConfig& cfg, double t_end,
                                 bool store_trajectory = true,
                                 const std::vector<double>* u0_override = nullptr);

/// Classical fixed-step RK4 on u' = A u + s(t).  Enforces the explicit
/// stability guard tau * max row sum <= 2.5.
MarchResult rk4_march(const FracOperatorMatrix& m, const ProblemSpec& p,
                      const TimeStepConfig& cfg, double t_end,
                      bool store_trajectory = true,
                      const std::vector<double>* u0_override = nullptr);

enum class TadjeranScheme { second, third };

struct TadjeranResult {
    double max_error = 0.0;
    std::vector<double> solution; // u(x_i, 1)
    std::vector<double> x;
    double tau = 0.0;
};

/// Solves u_t = Gamma(2.2)/6 x^{2.8} D^{1.8} u - (1+x) e^{-t} x^3 on [0,1]
/// to t=1 with u(x,0)=x^3, u(0,t)=0, u(1,t)=e^{-t}; returns the max-norm
/// error against e^{-t} x^3.  cfg.tau == 0 selects the time step by a
/// tau-halving Richardson check (temporal error below 1e-10).
TadjeranResult solve_tadjeran(TadjeranScheme kind, std::size_t nx, TimeStepConfig cfg = {});

struct Example1Result {
    double l1_error = 0.0;
    std::vector<double> solution;
    std::vector<double> oracle;
    std::vector<double> x;
};

/// The half-line experiment at alpha = 0.8: u' = -A^0.8 u on [0,1] with
/// initial data x^mu; L1 grid error at t_end against the stable-density
/// convolution oracle.  scheme_order 1 = optimal single term, 2 = the
/// second-order combination.
Example1Result solve_example1(Example1Initial kind, int scheme_order, std::size_t nx,
                              TimeStepConfig cfg = {}, double t_end = 1.0);

/// Same, with the oracle values supplied by the caller (so studies can
/// evaluate the oracle once on the finest grid and restrict).
Example1Result solve_example1_with_oracle(Example1Initial kind, int scheme_order,
                                          std::size_t nx, const std::vector<double>& oracle,
                                          TimeStepConfig cfg = {}, double t_end = 1.0);

struct ConvergenceRow {
    double resolution = 0.0; // nx or 1/h
    double h = 0.0;
    double error = 0.0;
    double ratio = std::numeric_limits<double>::quiet_NaN(); // error_{k-1}/error_k
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    double fitted_order = 0.0; // least-squares slope of log error vs log h
};

/// Generic study driver: error_at(resolution) measured over the given
/// resolutions with spacing h_of(resolution).
ConvergenceTable convergence_study(const std::function<double(std::size_t)>& error_at,
                                   const std::function<double(std::size_t)>& h_of,
                                   const std::vector<std::size_t>& resolutions);

/// Least-squares slope of log(err) against log(h).
double fitted_order(const std::vector<double>& h, const std::vector<double>& err);

} // namespace grunwald

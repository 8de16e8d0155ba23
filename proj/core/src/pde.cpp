#include "grunwald/pde.hpp"

#include <cmath>

#include "grunwald/weights.hpp"

namespace grunwald {

namespace {

long checked_integer(double v, const char* what) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9)
        throw GridMisalignment(std::string(what) + " must be an integer");
    return static_cast<long>(r);
}

double bc_value(const BoundaryValue& bc, double t) { return bc.value(t); }

double bc_derivative(const BoundaryValue& bc, double t) {
    if (bc.derivative) return bc.derivative(t);
    // 4th-order central difference fallback
    const double d = 1e-3 * std::max(1.0, std::abs(t));
    return (-bc.value(t + 2 * d) + 8 * bc.value(t + d) - 8 * bc.value(t - d) +
            bc.value(t - 2 * d)) /
           (12 * d);
}

} // namespace

FracOperatorMatrix assemble_matrix(const ProblemSpec& p, std::size_t nx) {
    if (nx < 8) throw PreconditionError("assemble_matrix: nx must be >= 8");
    p.scheme.validate();
    if (!(p.b > p.a)) throw PreconditionError("assemble_matrix: empty interval");

    FracOperatorMatrix m;
    m.nx = nx;
    m.h = (p.b - p.a) / static_cast<double>(nx);
    m.scheme = p.scheme;
    m.sign = p.scheme.order.sign();
    m.dirichlet_left = p.left_bc.has_value();
    m.dirichlet_right = p.right_bc.has_value();
    m.A = DenseMatrix(nx + 1, nx + 1);
    m.coeff.resize(nx + 1);
    for (std::size_t i = 0; i <= nx; ++i)
        m.coeff[i] = p.coeff ? p.coeff(p.a + m.h * static_cast<double>(i)) : 1.0;

    const std::size_t i_lo = m.dirichlet_left ? 1 : 0;
    const std::size_t i_hi = m.dirichlet_right ? nx - 1 : nx;
    const double alpha = p.scheme.order.alpha();

    for (const auto& term : p.scheme.terms) {
        const long c = checked_integer(term.scale, "assemble_matrix: scale c_j");
        if (c < 1) throw GridMisalignment("assemble_matrix: scale c_j must be >= 1");
        const long offset = checked_integer(term.scale * term.shift, "assemble_matrix: c_j*p_j");
        const double scale = term.weight * std::pow(term.scale * m.h, -alpha);
        const long n_w = (static_cast<long>(nx) + offset) / c + 1;
        const auto w = grunwald_weights(p.scheme.order, static_cast<std::size_t>(n_w));
        for (std::size_t i = i_lo; i <= i_hi; ++i) {
            long col = static_cast<long>(i) + offset;
            for (long mm = 0; mm <= n_w && col >= 0; ++mm, col -= c) {
                if (col <= static_cast<long>(nx))
                    m.A(i, static_cast<std::size_t>(col)) +=
                        m.sign * m.coeff[i] * scale * w[static_cast<std::size_t>(mm)];
            }
        }
    }
    return m;
}

namespace {

struct MarchSetup {
    std::size_t n = 0;
    double tau = 0.0;
    std::size_t n_steps = 0;
};

MarchSetup setup_march(const FracOperatorMatrix& m, const TimeStepConfig& cfg, double t_end) {
    MarchSetup s;
    s.n = m.A.rows();
    if (cfg.n_steps > 0) {
        s.n_steps = cfg.n_steps;
        s.tau = (cfg.tau > 0.0) ? cfg.tau : t_end / static_cast<double>(cfg.n_steps);
    } else {
        if (!(cfg.tau > 0.0))
            throw PreconditionError("march: either tau or n_steps must be set");
        s.n_steps = static_cast<std::size_t>(std::ceil(t_end / cfg.tau - 1e-12));
        s.tau = t_end / static_cast<double>(s.n_steps);
    }
    return s;
}

std::vector<double> initial_state(const FracOperatorMatrix& m, const ProblemSpec& p) {
    std::vector<double> u(m.A.rows());
    const double a = p.b - m.h * static_cast<double>(m.nx); // == p.a
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = p.initial ? p.initial(a + m.h * static_cast<double>(i)) : 0.0;
    return u;
}

void add_source(const FracOperatorMatrix& m, const ProblemSpec& p, double t,
                std::vector<double>& out) {
    if (!p.source) return;
    const std::size_t i_lo = m.dirichlet_left ? 1 : 0;
    const std::size_t i_hi = m.dirichlet_right ? m.nx - 1 : m.nx;
    for (std::size_t i = i_lo; i <= i_hi; ++i)
        out[i] += p.source(p.a + m.h * static_cast<double>(i), t);
}

} // namespace

MarchResult backward_euler_march(const FracOperatorMatrix& m, const ProblemSpec& p,
                                 const TimeStepConfig& cfg, double t_end,
                                 bool store_trajectory,
                                 const std::vector<double>* u0_override) {
    if (cfg.method != TimeStepMethod::BackwardEuler)
        throw PreconditionError("backward_euler_march: cfg.method mismatch");
    const MarchSetup s = setup_march(m, cfg, t_end);

    DenseMatrix M(s.n, s.n);
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = 0; j < s.n; ++j)
            M(i, j) = (i == j ? 1.0 : 0.0) - s.tau * m.A(i, j);
    // Dirichlet rows of A are zero, so the corresponding rows of M are
    // already identity rows; the boundary value goes into the right side.
    const LuFactorization lu(std::move(M));

    std::vector<double> u = u0_override ? *u0_override : initial_state(m, p);
    MarchResult result;
    result.tau = s.tau;
    result.n_steps = s.n_steps;
    if (store_trajectory) result.states.push_back(u);

    std::vector<double> rhs(s.n);
    for (std::size_t step = 1; step <= s.n_steps; ++step) {
        const double t1 = s.tau * static_cast<double>(step);
        rhs = u;
        std::vector<double> src(s.n, 0.0);
        add_source(m, p, t1, src);
        for (std::size_t i = 0; i < s.n; ++i) rhs[i] += s.tau * src[i];
        if (m.dirichlet_left) rhs[0] = bc_value(*p.left_bc, t1);
        if (m.dirichlet_right) rhs[m.nx] = bc_value(*p.right_bc, t1);
        u = lu.solve(std::move(rhs));
        if (store_trajectory) result.states.push_back(u);
    }
    if (!store_trajectory) result.states.push_back(u);
    return result;
}

MarchResult rk4_march(const FracOperatorMatrix& m, const ProblemSpec& p,
                      const TimeStepConfig& cfg, double t_end, bool store_trajectory,
                      const std::vector<double>* u0_override) {
    if (cfg.method != TimeStepMethod::RK4)
        throw PreconditionError("rk4_march: cfg.method mismatch");
    const MarchSetup s = setup_march(m, cfg, t_end);

    const double row_sum = m.A.max_abs_row_sum();
    if (s.tau * row_sum > 2.5)
        throw StabilityViolation("rk4_march: tau * max row sum = " +
                                 std::to_string(s.tau * row_sum) + " exceeds 2.5");

    // F(t, v) = A v + source(t); Dirichlet components follow d/dt bc(t) so the
    // stages stay consistent with the boundary data.
    auto eval_rhs = [&](double t, const std::vector<double>& v, std::vector<double>& out) {
        m.A.multiply(v, out);
        add_source(m, p, t, out);
        if (m.dirichlet_left) out[0] = bc_derivative(*p.left_bc, t);
        if (m.dirichlet_right) out[m.nx] = bc_derivative(*p.right_bc, t);
    };

    std::vector<double> u = u0_override ? *u0_override : initial_state(m, p);
    MarchResult result;
    result.tau = s.tau;
    result.n_steps = s.n_steps;
    if (store_trajectory) result.states.push_back(u);

    std::vector<double> k1(s.n), k2(s.n), k3(s.n), k4(s.n), tmp(s.n);
    for (std::size_t step = 0; step < s.n_steps; ++step) {
        const double t = s.tau * static_cast<double>(step);
        eval_rhs(t, u, k1);
        for (std::size_t i = 0; i < s.n; ++i) tmp[i] = u[i] + 0.5 * s.tau * k1[i];
        eval_rhs(t + 0.5 * s.tau, tmp, k2);
        for (std::size_t i = 0; i < s.n; ++i) tmp[i] = u[i] + 0.5 * s.tau * k2[i];
        eval_rhs(t + 0.5 * s.tau, tmp, k3);
        for (std::size_t i = 0; i < s.n; ++i) tmp[i] = u[i] + s.tau * k3[i];
        eval_rhs(t + s.tau, tmp, k4);
        for (std::size_t i = 0; i < s.n; ++i)
            u[i] += s.tau / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (store_trajectory) result.states.push_back(u);
    }
    if (!store_trajectory) result.states.push_back(u);
    return result;
}

namespace {

// Fixed-step RK4 with tau halved until the final state moves by < 1e-10.
std::vector<double> rk4_auto(const FracOperatorMatrix& m, const ProblemSpec& p,
                             double t_end, double& tau_used,
                             const std::vector<double>* u0_override = nullptr) {
    const double row_sum = m.A.max_abs_row_sum();
    double tau = std::min(0.02, 2.0 / std::max(row_sum, 1e-10));
    TimeStepConfig cfg{TimeStepMethod::RK4, tau, 0};
    std::vector<double> prev = rk4_march(m, p, cfg, t_end, false, u0_override).states.back();
    for (int iter = 0; iter < 12; ++iter) {
        tau *= 0.5;
        cfg.tau = tau;
        std::vector<double> next = rk4_march(m, p, cfg, t_end, false, u0_override).states.back();
        double diff = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i)
            diff = std::max(diff, std::abs(next[i] - prev[i]));
        prev = std::move(next);
        if (diff < 1e-10) break;
    }
    tau_used = tau;
    return prev;
}

} // namespace

TadjeranResult solve_tadjeran(TadjeranScheme kind, std::size_t nx, TimeStepConfig cfg) {
    const FracOrder order(1.8);
    ProblemSpec p;
    p.scheme = (kind == TadjeranScheme::second) ? second_order_scheme(order)
                                                : third_order_scheme(order);
    p.a = 0.0;
    p.b = 1.0;
    const double d0 = std::tgamma(2.2) / 6.0;
    p.coeff = [d0](double x) { return d0 * std::pow(x, 2.8); };
    p.source = [](double x, double t) { return -(1.0 + x) * std::exp(-t) * x * x * x; };
    p.initial = [](double x) { return x * x * x; };
    p.left_bc = BoundaryValue{[](double) { return 0.0; }, [](double) { return 0.0; }};
    p.right_bc = BoundaryValue{[](double t) { return std::exp(-t); },
                               [](double t) { return -std::exp(-t); }};

    const FracOperatorMatrix m = assemble_matrix(p, nx);

    TadjeranResult result;
    std::vector<double> u;
    if (cfg.method == TimeStepMethod::BackwardEuler) {
        if (!(cfg.tau > 0.0) && cfg.n_steps == 0) cfg.tau = 1e-3;
        u = backward_euler_march(m, p, cfg, 1.0, false).states.back();
        result.tau = cfg.tau;
    } else if (cfg.tau > 0.0 || cfg.n_steps > 0) {
        u = rk4_march(m, p, cfg, 1.0, false).states.back();
        result.tau = cfg.tau;
    } else {
        u = rk4_auto(m, p, 1.0, result.tau);
    }

    result.solution = u;
    result.x.resize(nx + 1);
    for (std::size_t i = 0; i <= nx; ++i) {
        result.x[i] = m.h * static_cast<double>(i);
        result.max_error = std::max(result.max_error,
                                    std::abs(u[i] - tadjeran_exact(result.x[i], 1.0)));
    }
    return result;
}

namespace {

ProblemSpec example1_problem(Example1Initial kind, int scheme_order) {
    const FracOrder order(0.8);
    ProblemSpec p;
    if (scheme_order == 1)
        p.scheme = make_optimal_scheme(order); // p = q = 0
    else if (scheme_order == 2)
        p.scheme = second_order_scheme(order);
    else
        throw PreconditionError("solve_example1: scheme_order must be 1 or 2");
    p.a = 0.0;
    p.b = 1.0;
    const double mu = example1_mu(kind);
    p.initial = [mu](double x) { return x > 0.0 ? std::pow(x, mu) : 0.0; };
    return p;
}

// f1 = x^{-0.3} is unbounded at 0: the first node takes the analytic
// first-cell average, all other nodes are pointwise samples.
std::vector<double> example1_initial_samples(Example1Initial kind, std::size_t nx) {
    const double mu = example1_mu(kind);
    const double h = 1.0 / static_cast<double>(nx);
    std::vector<double> u(nx + 1, 0.0);
    for (std::size_t i = 1; i <= nx; ++i) u[i] = std::pow(h * static_cast<double>(i), mu);
    u[0] = (mu < 0.0) ? std::pow(h, mu) / (mu + 1.0) : 0.0;
    return u;
}

} // namespace

Example1Result solve_example1_with_oracle(Example1Initial kind, int scheme_order,
                                          std::size_t nx, const std::vector<double>& oracle,
                                          TimeStepConfig cfg, double t_end) {
    ProblemSpec p = example1_problem(kind, scheme_order);
    const FracOperatorMatrix m = assemble_matrix(p, nx);
    const std::vector<double> u0 = example1_initial_samples(kind, nx);

    std::vector<double> u;
    if (cfg.method == TimeStepMethod::BackwardEuler) {
        u = backward_euler_march(m, p, cfg, t_end, false, &u0).states.back();
    } else if (cfg.tau > 0.0 || cfg.n_steps > 0) {
        u = rk4_march(m, p, cfg, t_end, false, &u0).states.back();
    } else {
        double tau_used = 0.0;
        u = rk4_auto(m, p, t_end, tau_used, &u0);
    }

    Example1Result r;
    r.solution = u;
    r.oracle = oracle;
    r.x.resize(nx + 1);
    double acc = 0.0;
    for (std::size_t i = 0; i <= nx; ++i) {
        r.x[i] = static_cast<double>(i) / static_cast<double>(nx);
        acc += std::abs(u[i] - oracle[i]);
    }
    r.l1_error = acc / static_cast<double>(nx);
    return r;
}

Example1Result solve_example1(Example1Initial kind, int scheme_order, std::size_t nx,
                              TimeStepConfig cfg, double t_end) {
    std::vector<double> x(nx + 1);
    for (std::size_t i = 0; i <= nx; ++i)
        x[i] = static_cast<double>(i) / static_cast<double>(nx);
    const auto oracle = exact_solution_example1(example1_mu(kind), 0.8, t_end, x);
    return solve_example1_with_oracle(kind, scheme_order, nx, oracle, cfg, t_end);
}

ConvergenceTable convergence_study(const std::function<double(std::size_t)>& error_at,
                                   const std::function<double(std::size_t)>& h_of,
                                   const std::vector<std::size_t>& resolutions) {
    if (resolutions.size() < 3)
        throw PreconditionError("convergence_study: need at least 3 resolutions");
    for (std::size_t i = 1; i < resolutions.size(); ++i)
        if (resolutions[i] <= resolutions[i - 1])
            throw PreconditionError("convergence_study: resolutions must be strictly increasing");

    ConvergenceTable table;
    std::vector<double> hs, errs;
    for (std::size_t r : resolutions) {
        ConvergenceRow row;
        row.resolution = static_cast<double>(r);
        row.h = h_of(r);
        row.error = error_at(r);
        if (!table.rows.empty()) row.ratio = table.rows.back().error / row.error;
        hs.push_back(row.h);
        errs.push_back(row.error);
        table.rows.push_back(row);
    }
    table.fitted_order = fitted_order(hs, errs);
    return table;
}

double fitted_order(const std::vector<double>& h, const std::vector<double>& err) {
    const std::size_t n = h.size();
    double sx = 0.0, sy = 0.0;
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        lx[i] = std::log(h[i]);
        ly[i] = std::log(std::max(err[i], 1e-300));
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    return num / den;
}

} // namespace grunwald

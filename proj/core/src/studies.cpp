#include "grunwald/studies.hpp"

#include <cmath>

#include "grunwald/oracles.hpp"
#include "grunwald/weights.hpp"

namespace grunwald {

namespace {

GridFunction gaussian_grid(std::size_t level) {
    const double h = std::pow(2.0, -static_cast<double>(level));
    const long half = static_cast<long>(std::llround(8.0 / h));
    GridFunction f;
    f.h = h;
    f.origin_index = half;
    f.domain = Domain::FullLine;
    f.samples.resize(static_cast<std::size_t>(2 * half + 1));
    for (std::size_t i = 0; i < f.samples.size(); ++i) {
        const double x = f.x(i);
        f.samples[i] = std::exp(-x * x);
    }
    return f;
}

} // namespace

double consistency_error(const Scheme& s, std::size_t level) {
    const GridFunction f = gaussian_grid(level);
    const GridFunction approx = apply_scheme(f, s);
    const GridFunction exact = spectral_fractional_derivative(f, s.order.alpha()).values;
    double acc = 0.0;
    for (std::size_t i = 0; i < f.samples.size(); ++i)
        acc += std::abs(approx.samples[i] - exact.samples[i]);
    return acc * f.h;
}

ConvergenceTable consistency_study(const Scheme& s, const std::vector<std::size_t>& levels) {
    return convergence_study(
        [&](std::size_t level) { return consistency_error(s, level); },
        [](std::size_t level) { return std::pow(2.0, -static_cast<double>(level)); }, levels);
}

TadjeranStudy tadjeran_study(TadjeranScheme kind, const std::vector<std::size_t>& nxs,
                             TimeStepConfig cfg) {
    TadjeranStudy study;
    study.table = convergence_study(
        [&](std::size_t nx) { return solve_tadjeran(kind, nx, cfg).max_error; },
        [](std::size_t nx) { return 1.0 / static_cast<double>(nx); }, nxs);
    return study;
}

Example1Study example1_study(Example1Initial kind, int scheme_order,
                             const std::vector<std::size_t>& nxs, bool certify_oracle,
                             TimeStepConfig cfg) {
    const std::size_t nx_fine = nxs.back();
    for (std::size_t nx : nxs)
        if (nx_fine % nx != 0)
            throw PreconditionError("example1_study: resolutions must nest into the finest");

    std::vector<double> x_fine(nx_fine + 1);
    for (std::size_t i = 0; i <= nx_fine; ++i)
        x_fine[i] = static_cast<double>(i) / static_cast<double>(nx_fine);

    const double mu = example1_mu(kind);
    const auto oracle_fine = exact_solution_example1(mu, 0.8, 1.0, x_fine, 64);

    Example1Study study;
    if (certify_oracle) {
        const auto oracle_check = exact_solution_example1(mu, 0.8, 1.0, x_fine, 128);
        for (std::size_t i = 0; i < oracle_fine.size(); ++i)
            study.oracle_self_error =
                std::max(study.oracle_self_error, std::abs(oracle_fine[i] - oracle_check[i]));
    }

    study.table = convergence_study(
        [&](std::size_t nx) {
            std::vector<double> oracle(nx + 1);
            const std::size_t stride = nx_fine / nx;
            for (std::size_t i = 0; i <= nx; ++i) oracle[i] = oracle_fine[i * stride];
            return solve_example1_with_oracle(kind, scheme_order, nx, oracle, cfg).l1_error;
        },
        [](std::size_t nx) { return 1.0 / static_cast<double>(nx); }, nxs);
    return study;
}

} // namespace grunwald

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "grunwald/fourier_norms.hpp"
#include "grunwald/oracles.hpp"
#include "grunwald/pde.hpp"
#include "grunwald/schemes.hpp"
#include "grunwald/weights.hpp"

using namespace grunwald;

namespace {

GridFunction gaussian_samples(std::size_t n) {
    GridFunction f;
    f.h = 16.0 / static_cast<double>(n - 1);
    f.origin_index = static_cast<long>(n / 2);
    f.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = f.x(i);
        f.samples[i] = std::exp(-x * x);
    }
    return f;
}

void BM_GrunwaldWeights(benchmark::State& state) {
    const FracOrder order(1.8);
    for (auto _ : state) {
        auto w = grunwald_weights(order, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(w);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GrunwaldWeights)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

void BM_ApplySecondOrderScheme(benchmark::State& state) {
    const auto f = gaussian_samples(static_cast<std::size_t>(state.range(0)));
    const Scheme s = second_order_scheme(FracOrder(1.8));
    for (auto _ : state) {
        auto g = apply_scheme(f, s);
        benchmark::DoNotOptimize(g);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplySecondOrderScheme)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Complexity();

void BM_SpectralOracle(benchmark::State& state) {
    const auto f = gaussian_samples(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto d = spectral_fractional_derivative(f, 1.8);
        benchmark::DoNotOptimize(d);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectralOracle)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Complexity();

void BM_MultiplierNorm(benchmark::State& state) {
    const SymbolFn psi = combined_symbol(make_optimal_scheme(FracOrder(1.8)), 1.0);
    const double t = 1.0;
    for (auto _ : state) {
        auto c = periodic_fourier_coeffs_fixed(
            [&](double k) { return std::exp(t * psi(k)); },
            static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(l1_multiplier_norm(c));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MultiplierNorm)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_StableDensity(benchmark::State& state) {
    double x = 0.05;
    for (auto _ : state) {
        benchmark::DoNotOptimize(stable_density(0.8, 1.0, x));
        x = (x < 20.0) ? x * 1.37 : 0.05;
    }
}
BENCHMARK(BM_StableDensity);

void BM_SolveTadjeran(benchmark::State& state) {
    const auto nx = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto r = solve_tadjeran(TadjeranScheme::second, nx);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SolveTadjeran)->Arg(10)->Arg(25);

} // namespace

BENCHMARK_MAIN();

#include "grunwald/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "grunwald/series.hpp"

namespace grunwald {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::complex<double> psi_eval(const FracOrder& order, double h, double p, double k) {
    const double alpha = order.alpha();
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> base = 1.0 - std::exp(i * (k * h));
    if (std::abs(base) == 0.0) return {0.0, 0.0};
    return order.sign() * std::pow(h, -alpha) * std::exp(-i * (k * h * p)) *
           std::pow(base, alpha);
}

std::complex<double> psi_deriv(const FracOrder& order, double h, double p, double k) {
    // d/dk [e^{-ikhp} (1-e^{ikh})^alpha]
    //   = -ih e^{-ikhp} (1-e^{ikh})^{alpha-1} [p(1-e^{ikh}) + alpha e^{ikh}]
    const double alpha = order.alpha();
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> eikh = std::exp(i * (k * h));
    const std::complex<double> base = 1.0 - eikh;
    if (std::abs(base) == 0.0) {
        if (alpha > 1.0) return {0.0, 0.0};
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    return order.sign() * std::pow(h, -alpha) * (-i * h) * std::exp(-i * (k * h * p)) *
           std::pow(base, alpha - 1.0) * (p * base + alpha * eikh);
}

double psi_real_closed_form(const FracOrder& order, double p, double k) {
    if (k < -1e-12 || k > kPi + 1e-12)
        throw PreconditionError("psi_real_closed_form: k must lie in [0, pi]");
    k = std::clamp(k, 0.0, kPi);
    const double alpha = order.alpha();
    return order.sign() * std::pow(2.0, alpha) * std::pow(std::sin(k / 2.0), alpha) *
           std::cos((alpha / 2.0 - p) * k - alpha * kPi / 2.0);
}

SymbolFn::SymbolFn(Scheme scheme, double h) : scheme_(std::move(scheme)), h_(h) {
    scheme_.validate();
    if (!(h > 0.0)) throw PreconditionError("SymbolFn: h must be positive");
}

std::complex<double> SymbolFn::operator()(double k) const {
    std::complex<double> v(0.0, 0.0);
    for (const auto& t : scheme_.terms)
        v += t.weight * psi_eval(scheme_.order, t.scale * h_, t.shift, k);
    return v;
}

std::complex<double> SymbolFn::derivative(double k) const {
    std::complex<double> v(0.0, 0.0);
    for (const auto& t : scheme_.terms)
        v += t.weight * psi_deriv(scheme_.order, t.scale * h_, t.shift, k);
    return v;
}

SymbolFn combined_symbol(const Scheme& s, double h) { return SymbolFn(s, h); }

StabilityReport certify_stability(const SymbolFn& sym, std::size_t k_samples) {
    if (k_samples < 1024)
        throw PreconditionError("certify_stability: k_samples must be >= 1024");

    const SymbolFn phi = sym.at_unit_spacing();
    const double alpha = phi.alpha();

    // Uniform grid on (0, pi] plus a geometric tail toward 0: uniform points
    // alone undersample the k^alpha envelope near the origin.
    std::vector<double> grid;
    grid.reserve(k_samples + 64);
    for (std::size_t i = 1; i <= k_samples; ++i)
        grid.push_back(kPi * static_cast<double>(i) / static_cast<double>(k_samples));
    for (int j = 1; j <= 60; ++j) {
        const double k = kPi * std::pow(0.5, j);
        if (k < kPi / static_cast<double>(k_samples)) grid.push_back(k);
    }

    const double base_step = kPi / (8.0 * static_cast<double>(k_samples));

    double maxabs = 0.0;
    double C = 0.0, Cp = 0.0;
    double c = std::numeric_limits<double>::infinity();
    for (double k : grid) {
        const std::complex<double> v = phi(k);
        maxabs = std::max(maxabs, std::abs(v));
        C = std::max(C, std::abs(v) / std::pow(k, alpha));
        c = std::min(c, -v.real() / std::pow(k, alpha));
        // Central difference; shrink the step near the origin so the quotient
        // still resolves the k^{alpha-1} envelope.
        const double d = std::min(base_step, k / 8.0);
        const std::complex<double> dv = (phi(k + d) - phi(k - d)) / (2.0 * d);
        Cp = std::max(Cp, std::abs(dv) / std::pow(k, alpha - 1.0));
    }
    if (maxabs < 1e-15)
        throw DegenerateSymbol("certify_stability: symbol vanishes identically");

    StabilityReport rep;
    rep.C_bound = C;
    rep.Cprime_bound = Cp;
    rep.c_coercivity = c;
    rep.sign_change = !(c > 0.0);
    rep.k_grid_size = grid.size();
    return rep;
}

int optimal_shift(const FracOrder& order) {
    order.require_strict_order("optimal_shift");
    return order.q();
}

double taylor_cancellation_check(const Scheme& s, std::size_t N) {
    s.validate();
    std::vector<OmegaSeries> series;
    series.reserve(s.terms.size());
    for (const auto& t : s.terms)
        series.push_back(omega_taylor(t.shift, s.order.alpha(), N));

    double worst = 0.0;
    for (std::size_t n = 0; n <= N; ++n) {
        double acc = 0.0;
        for (std::size_t j = 0; j < s.terms.size(); ++j)
            acc += s.terms[j].weight * series[j].coeffs[n] * std::pow(s.terms[j].scale, static_cast<double>(n));
        if (n == 0) acc -= 1.0;
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

} // namespace grunwald

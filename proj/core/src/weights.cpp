#include "grunwald/weights.hpp"

#include <cmath>

namespace grunwald {

std::vector<double> grunwald_weights(long double alpha, std::size_t M) {
    std::vector<double> w(M + 1);
    long double acc = 1.0L; // extended precision: each w_m rounds only once
    w[0] = 1.0;
    for (std::size_t m = 1; m <= M; ++m) {
        acc *= (static_cast<long double>(m) - 1.0L - alpha) / static_cast<long double>(m);
        w[m] = static_cast<double>(acc);
    }
    return w;
}

std::vector<double> grunwald_weights(const FracOrder& order, std::size_t M) {
    return grunwald_weights(static_cast<long double>(order.alpha()), M);
}

namespace {

long checked_integer(double v, const char* what) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9)
        throw GridMisalignment(std::string(what) + " must be an integer");
    return static_cast<long>(r);
}

// Accumulates b * (c h)^{-alpha} sum_m w_m f[i - (m c - p c)] into out.
// stride = c and offset = c*p are integers so every stencil point lands on
// the grid.  Kahan summation keeps the cancellation in sum_m w_m f benign.
void accumulate_term(const GridFunction& f, const FracOrder& order, long stride,
                     long offset, double b, double spacing, long truncation,
                     std::vector<double>& out) {
    const long n = static_cast<long>(f.samples.size());
    const double scale = b * std::pow(spacing, -order.alpha());

    long m_max = (n - 1 + offset) / stride + 1;
    if (truncation >= 0 && truncation < m_max) m_max = truncation;
    const auto w = grunwald_weights(order, static_cast<std::size_t>(m_max));

    for (long i = 0; i < n; ++i) {
        double sum = 0.0, comp = 0.0;
        long src = i + offset;
        for (long m = 0; m <= m_max && src >= 0; ++m, src -= stride) {
            if (src < n) {
                const double y = w[static_cast<std::size_t>(m)] * f.samples[static_cast<std::size_t>(src)] - comp;
                const double t = sum + y;
                comp = (t - sum) - y;
                sum = t;
            }
        }
        out[static_cast<std::size_t>(i)] += scale * sum;
    }
}

} // namespace

GridFunction apply_shifted_grunwald(const GridFunction& f, const FracOrder& order,
                                    double p, long truncation) {
    f.validate();
    if (std::abs(p - std::round(p)) > 1e-9)
        throw NonIntegerShift("apply_shifted_grunwald: shift p must be an integer");
    GridFunction out = f;
    std::fill(out.samples.begin(), out.samples.end(), 0.0);
    accumulate_term(f, order, 1, static_cast<long>(std::round(p)), 1.0, f.h,
                    truncation, out.samples);
    return out;
}

GridFunction apply_scheme(const GridFunction& f, const Scheme& s) {
    f.validate();
    s.validate();
    GridFunction out = f;
    std::fill(out.samples.begin(), out.samples.end(), 0.0);
    for (const auto& term : s.terms) {
        const long c = checked_integer(term.scale, "apply_scheme: scale c_j");
        if (c < 1) throw GridMisalignment("apply_scheme: scale c_j must be >= 1");
        const long offset = checked_integer(term.scale * term.shift, "apply_scheme: c_j*p_j");
        accumulate_term(f, s.order, c, offset, term.weight, term.scale * f.h, -1,
                        out.samples);
    }
    return out;
}

} // namespace grunwald

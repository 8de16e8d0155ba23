#include "grunwald/series.hpp"

#include <cmath>

namespace grunwald {

namespace {

// (1 - e^{-z})/z with the removable singularity handled by series for small z.
std::complex<double> base_ratio(std::complex<double> z) {
    if (std::abs(z) < 0.5) {
        std::complex<double> term(1.0, 0.0), sum(0.0, 0.0);
        for (int n = 0; n < 24; ++n) {
            sum += term;                 // term = (-z)^n / (n+1)!
            term *= -z / double(n + 2);
            if (std::abs(term) < 1e-18) break;
        }
        return sum;
    }
    return (1.0 - std::exp(-z)) / z;
}

} // namespace

std::complex<double> omega_eval(double p, double alpha, std::complex<double> z) {
    if (z == std::complex<double>(0.0, 0.0)) return {1.0, 0.0};
    const std::complex<double> base = base_ratio(z);
    const double mag = std::abs(base);
    if (base.real() <= 0.0 && std::abs(base.imag()) <= 1e-14 * (std::abs(base.real()) + 1e-290))
        throw BranchCut("omega_eval: (1-e^{-z})/z lies on the negative real axis");
    if (mag == 0.0) return {0.0, 0.0};
    return std::pow(base, alpha) * std::exp(z * p);
}

OmegaSeries omega_taylor(double p, double alpha, std::size_t N) {
    // u(z) = (1 - e^{-z})/z = sum_n (-1)^n z^n/(n+1)!
    std::vector<long double> u(N + 1);
    u[0] = 1.0L;
    for (std::size_t n = 1; n <= N; ++n) u[n] = -u[n - 1] / static_cast<long double>(n + 1);

    // v = u^alpha by the J.C.P. Miller recurrence (u_0 = 1).
    std::vector<long double> v(N + 1);
    v[0] = 1.0L;
    const long double a = static_cast<long double>(alpha);
    for (std::size_t n = 1; n <= N; ++n) {
        long double s = 0.0L;
        for (std::size_t k = 1; k <= n; ++k)
            s += (static_cast<long double>(k) * (a + 1.0L) - static_cast<long double>(n)) * u[k] * v[n - k];
        v[n] = s / static_cast<long double>(n);
    }

    // Cauchy product with exp(pz) = sum_n p^n z^n / n!.
    std::vector<long double> e(N + 1);
    e[0] = 1.0L;
    for (std::size_t n = 1; n <= N; ++n) e[n] = e[n - 1] * static_cast<long double>(p) / static_cast<long double>(n);

    OmegaSeries out;
    out.p = p;
    out.alpha = alpha;
    out.coeffs.resize(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        long double s = 0.0L;
        for (std::size_t k = 0; k <= n; ++k) s += v[k] * e[n - k];
        out.coeffs[n] = static_cast<double>(s);
    }
    return out;
}

} // namespace grunwald

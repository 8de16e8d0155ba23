#include "grunwald/schemes.hpp"

#include <cmath>

#include "grunwald/linalg.hpp"
#include "grunwald/series.hpp"

namespace grunwald {

Scheme make_single_term_scheme(const FracOrder& order, double p) {
    Scheme s{order, {{1.0, 1.0, p}}, 1};
    return s;
}

Scheme make_optimal_scheme(const FracOrder& order) {
    order.require_strict_order("make_optimal_scheme");
    return make_single_term_scheme(order, static_cast<double>(order.q()));
}

Scheme second_order_scheme(const FracOrder& order) {
    const double alpha = order.alpha();
    if (alpha > 0.0 && alpha < 1.0) {
        Scheme s{order, {{2.0, 1.0, 0.0}, {-1.0, 2.0, 0.0}}, 2};
        return s;
    }
    if (alpha > 1.0 && alpha < 2.0) {
        const double a = 2.0 - 2.0 / alpha;
        Scheme s{order, {{a, 1.0, 1.0}, {1.0 - a, 2.0, 0.5}}, 2};
        return s;
    }
    throw UnsupportedOrder("second_order_scheme: recipe exists only for 0<alpha<1 or 1<alpha<2");
}

Scheme third_order_scheme(const FracOrder& order) {
    const double alpha = order.alpha();
    if (!(alpha > 1.0 && alpha < 2.0))
        throw UnsupportedOrder("third_order_scheme: recipe exists only for 1<alpha<2");
    const double a = (7.0 - 8.0 * alpha + 3.0 * alpha * alpha) / (3.0 * (alpha - 1.0));
    const double b = (-7.0 + 3.0 * alpha) / (3.0 * (alpha - 1.0));
    const double c = 1.0 - a - b;
    Scheme s{order, {{a, 1.0, 1.0}, {b, 2.0, 0.5}, {c, 1.0, 0.0}}, 3};
    return s;
}

std::vector<double> solve_scheme_coefficients(const FracOrder& order,
                                              const std::vector<std::pair<double, double>>& pairs,
                                              std::size_t N) {
    if (pairs.size() != N + 1)
        throw PreconditionError("solve_scheme_coefficients: need exactly N+1 (c,p) pairs");

    // Row n: sum_j b_j a_{j,n} c_j^n = delta_{n,0}, with a_{j,n} the
    // omega_{p_j,alpha} Taylor coefficients.
    DenseMatrix A(N + 1, N + 1);
    for (std::size_t j = 0; j <= N; ++j) {
        const auto series = omega_taylor(pairs[j].second, order.alpha(), N);
        double cn = 1.0;
        for (std::size_t n = 0; n <= N; ++n) {
            A(n, j) = series.coeffs[n] * cn;
            cn *= pairs[j].first;
        }
    }
    std::vector<double> rhs(N + 1, 0.0);
    rhs[0] = 1.0;
    return solve_dense_system(std::move(A), std::move(rhs));
}

Scheme scheme_from_pairs(const FracOrder& order,
                         const std::vector<std::pair<double, double>>& pairs,
                         std::size_t N) {
    const auto b = solve_scheme_coefficients(order, pairs, N);
    Scheme s{order, {}, static_cast<int>(N) + 1};
    s.terms.reserve(pairs.size());
    for (std::size_t j = 0; j < pairs.size(); ++j)
        s.terms.push_back({b[j], pairs[j].first, pairs[j].second});
    return s;
}

} // namespace grunwald

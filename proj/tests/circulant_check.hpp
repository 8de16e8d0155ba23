#pragma once

// Brute-force route to ||e^{t A_h}|| on the n-point circulant lattice:
// wrap the Grunwald weights into a circulant generator, exponentiate the
// dense matrix by scaling-and-squaring, and take the column l1 norm.
// Entirely independent of the FFT-based coefficient machinery.

#include <cmath>
#include <cstddef>
#include <vector>

#include "grunwald/types.hpp"
#include "grunwald/weights.hpp"

namespace testutil {

inline std::vector<double> circulant_column(const grunwald::FracOrder& order, int p,
                                            std::size_t n) {
    const std::size_t M = 512 * n;
    const auto w = grunwald::grunwald_weights(order, M);
    std::vector<double> c(n, 0.0);
    double total = 0.0;
    for (std::size_t m = 0; m <= M; ++m) {
        const long r = (static_cast<long>(m) - p) % static_cast<long>(n);
        const std::size_t idx =
            static_cast<std::size_t>((r + static_cast<long>(n)) % static_cast<long>(n));
        c[idx] += order.sign() * w[m];
        total += w[m];
    }
    // the full weight sum telescopes to zero; spread the truncated tail
    // uniformly (leftover per-residue error is O(M^{-1-alpha}))
    for (std::size_t i = 0; i < n; ++i)
        c[i] += order.sign() * (0.0 - total) / static_cast<double>(n);
    return c;
}

inline std::vector<std::vector<double>> expm_dense(const std::vector<std::vector<double>>& A,
                                                   double t) {
    const std::size_t n = A.size();
    double norm = 0.0;
    for (const auto& row : A) {
        double s = 0.0;
        for (double v : row) s += std::abs(v);
        norm = std::max(norm, s * std::abs(t));
    }
    int squarings = 0;
    double scale = t;
    while (norm > 0.5) {
        norm *= 0.5;
        scale *= 0.5;
        ++squarings;
    }
    auto matmul = [n](const std::vector<std::vector<double>>& X,
                      const std::vector<std::vector<double>>& Y) {
        std::vector<std::vector<double>> Z(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const double x = X[i][k];
                if (x == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) Z[i][j] += x * Y[k][j];
            }
        return Z;
    };
    std::vector<std::vector<double>> E(n, std::vector<double>(n, 0.0)),
        term(n, std::vector<double>(n, 0.0)), As(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) E[i][i] = term[i][i] = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) As[i][j] = A[i][j] * scale;
    for (int k = 1; k <= 24; ++k) {
        term = matmul(term, As);
        for (auto& row : term)
            for (double& v : row) v /= static_cast<double>(k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) E[i][j] += term[i][j];
    }
    for (int s = 0; s < squarings; ++s) E = matmul(E, E);
    return E;
}

/// Column l1 norm of e^{t C} for the wrapped-weight circulant generator.
inline double circulant_expm_column_norm(const grunwald::FracOrder& order, int p,
                                         std::size_t n, double t) {
    const auto col = circulant_column(order, p, n);
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A[i][j] = col[(i + n - j) % n];
    const auto E = expm_dense(A, t);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::abs(E[i][0]);
    return s;
}

} // namespace testutil

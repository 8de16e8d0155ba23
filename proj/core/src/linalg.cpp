#include "grunwald/linalg.hpp"

#include <cmath>

namespace grunwald {

void DenseMatrix::multiply(const std::vector<double>& x, std::vector<double>& y) const {
    y.assign(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        const double* row = a_.data() + i * cols_;
        double s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) s += row[j] * x[j];
        y[i] = s;
    }
}

double DenseMatrix::max_abs_row_sum() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
        if (s > best) best = s;
    }
    return best;
}

namespace {

// Shared elimination kernel.  Returns false when a pivot is (numerically) zero.
bool lu_decompose(DenseMatrix& A, std::vector<std::size_t>& perm) {
    const std::size_t n = A.rows();
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(A(i, j)));
    if (scale == 0.0) return false;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(A(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(A(i, k)) > best) { best = std::abs(A(i, k)); piv = i; }
        if (best <= 1e-13 * scale) return false;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
            std::swap(perm[k], perm[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = A(i, k) / A(k, k);
            A(i, k) = m;
            if (m != 0.0)
                for (std::size_t j = k + 1; j < n; ++j) A(i, j) -= m * A(k, j);
        }
    }
    return true;
}

std::vector<double> lu_solve(const DenseMatrix& lu, const std::vector<std::size_t>& perm,
                             const std::vector<double>& rhs) {
    const std::size_t n = lu.rows();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[perm[i]];
    for (std::size_t i = 1; i < n; ++i) {
        double s = x[i];
        for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= lu(ii, j) * x[j];
        x[ii] = s / lu(ii, ii);
    }
    return x;
}

} // namespace

LuFactorization::LuFactorization(DenseMatrix A) : lu_(std::move(A)) {
    if (lu_.rows() != lu_.cols())
        throw PreconditionError("LuFactorization: matrix must be square");
    if (!lu_decompose(lu_, perm_))
        throw SingularFactorization("LuFactorization: singular matrix");
}

std::vector<double> LuFactorization::solve(std::vector<double> rhs) const {
    return lu_solve(lu_, perm_, rhs);
}

std::vector<double> solve_dense_system(DenseMatrix A, std::vector<double> b) {
    if (A.rows() != A.cols() || A.rows() != b.size())
        throw PreconditionError("solve_dense_system: shape mismatch");
    std::vector<std::size_t> perm;
    if (!lu_decompose(A, perm))
        throw SingularSystem("solve_dense_system: singular system");
    return lu_solve(A, perm, b);
}

} // namespace grunwald

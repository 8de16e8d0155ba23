#pragma once

#include <cstddef>
#include <vector>

#include "grunwald/errors.hpp"

namespace grunwald {

/// Row-major dense matrix; just enough linear algebra for the solvers here.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// y = A x
    void multiply(const std::vector<double>& x, std::vector<double>& y) const;

    /// max_i sum_j |a_ij|
    double max_abs_row_sum() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

/// LU factorization with partial pivoting, reusable across solves.
class LuFactorization {
  public:
    /// Throws SingularFactorization when a pivot vanishes.
    explicit LuFactorization(DenseMatrix A);

    std::vector<double> solve(std::vector<double> rhs) const;

  private:
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
};

/// Solves a small dense system in place; throws SingularSystem on breakdown.
/// Used for scheme-coefficient systems where "singular" means degenerate data.
std::vector<double> solve_dense_system(DenseMatrix A, std::vector<double> b);

} // namespace grunwald

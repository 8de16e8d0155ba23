#pragma once

#include <utility>
#include <vector>

#include "grunwald/types.hpp"

namespace grunwald {

/// Single-term scheme b=1, c=1 with the given shift.
Scheme make_single_term_scheme(const FracOrder& order, double p);

/// Single-term scheme at the optimal shift p = q.
Scheme make_optimal_scheme(const FracOrder& order);

/// Second-order combination: {(2,1,0), (-1,2,0)} for 0<alpha<1 and
/// {(2-2/alpha,1,1), (2/alpha-1,2,1/2)} for 1<alpha<2.
Scheme second_order_scheme(const FracOrder& order);

/// Third-order combination a psi^1_h + b psi^{1/2}_{2h} + c psi^0_h with
/// a = (7-8a+3a^2)/(3(a-1)), b = (-7+3a)/(3(a-1)), c = 1-a-b; 1<alpha<2 only.
Scheme third_order_scheme(const FracOrder& order);

/// Solves the Taylor-cancellation system sum_j b_j a_{j,n} c_j^n = delta_{n,0},
/// 0 <= n <= N, for the weights b_j of the given (c_j, p_j) pairs.
/// Requires pairs.size() == N+1; throws SingularSystem for degenerate pairs.
std::vector<double> solve_scheme_coefficients(const FracOrder& order,
                                              const std::vector<std::pair<double, double>>& scale_shift_pairs,
                                              std::size_t N);

/// Builds a Scheme from (c_j, p_j) pairs with weights from
/// solve_scheme_coefficients.
Scheme scheme_from_pairs(const FracOrder& order,
                         const std::vector<std::pair<double, double>>& scale_shift_pairs,
                         std::size_t N);

} // namespace grunwald

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "grunwald/errors.hpp"

namespace grunwald {

inline constexpr const char* kVersion = "0.1.0";

/// Fractional order alpha > 0 together with the integer q satisfying
/// 2q-1 < alpha < 2q+1.  q determines the sign (-1)^{q+1} in front of the
/// fractional derivative and the optimal Grunwald shift.
///
/// Odd integer alpha sits on the boundary between two q ranges; we admit it
/// (taking q from the upper range, so alpha=1 behaves like the first
/// derivative with sign +1) but operations that rely on the strict dichotomy
/// call require_strict_order() and reject it.
class FracOrder {
  public:
    FracOrder() : FracOrder(1.0) {} // placeholder for not-yet-configured schemes

    explicit FracOrder(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw PreconditionError("FracOrder: alpha must be positive and finite");
        q_ = static_cast<int>(std::floor(alpha / 2.0 + 0.5)); // half-integers round up
    }

    double alpha() const { return alpha_; }
    int q() const { return q_; }

    /// (-1)^{q+1}: -1 for 0<alpha<1, +1 for 1<alpha<3, ...
    double sign() const { return (q_ % 2 == 1) ? 1.0 : -1.0; }

    bool is_odd_integer() const {
        return alpha_ == std::floor(alpha_) && static_cast<long>(alpha_) % 2 == 1;
    }

    /// Throws unless 2q-1 < alpha < 2q+1 holds strictly.
    void require_strict_order(const char* what) const {
        if (is_odd_integer())
            throw PreconditionError(std::string(what) +
                                    ": alpha must not be an odd integer");
    }

  private:
    double alpha_;
    int q_;
};

/// One term b_j * A^alpha_{c_j h, p_j} of a combined Grunwald scheme.
struct SchemeTerm {
    double weight; // b_j
    double scale;  // c_j > 0
    double shift;  // p_j
};

/// A linear combination of shifted Grunwald formulas.  design_order is the
/// intended consistency order N+1 (Taylor cancellation through degree N).
struct Scheme {
    FracOrder order;
    std::vector<SchemeTerm> terms;
    int design_order = 1;

    void validate() const {
        if (terms.empty()) throw PreconditionError("Scheme: no terms");
        double sum = 0.0;
        for (const auto& t : terms) {
            if (!(t.scale > 0.0)) throw PreconditionError("Scheme: scale c_j must be positive");
            sum += t.weight;
        }
        if (std::abs(sum - 1.0) > 1e-8)
            throw PreconditionError("Scheme: weights must sum to 1");
    }
};

enum class Domain { FullLine, HalfLine, Interval };

/// Uniform-grid samples of a function.  Out-of-range samples read as zero
/// (for HalfLine/Interval this is the zero extension of the Riemann-Liouville
/// lower terminal; FullLine grids are assumed wide enough that the samples
/// have decayed).
struct GridFunction {
    std::vector<double> samples;
    double h = 1.0;
    long origin_index = 0; // index of x = 0
    Domain domain = Domain::FullLine;
    double a = 0.0, b = 0.0; // interval bounds when domain == Interval

    double x(std::size_t i) const {
        return (static_cast<long>(i) - origin_index) * h;
    }

    void validate() const {
        if (!(h > 0.0)) throw PreconditionError("GridFunction: h must be positive");
        for (double v : samples)
            if (!std::isfinite(v)) throw PreconditionError("GridFunction: non-finite sample");
    }
};

} // namespace grunwald

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace testutil {

// Gamma with sign for negative non-integer arguments, via lgamma.  Used as
// the independent high-precision oracle for the weight recurrence.
inline double gamma_signed(double x) {
    if (x > 0.0) return std::exp(std::lgamma(x));
    const double mag = std::exp(std::lgamma(x));
    const long fl = static_cast<long>(std::floor(x));
    return (fl % 2 == 0) ? mag : -mag;
}

// w_m = Gamma(m - alpha) / (Gamma(-alpha) Gamma(m + 1)) evaluated through
// log-Gamma differences (no overflow for large m).
inline double weight_gamma_formula(double alpha, long m) {
    const double num = std::lgamma(static_cast<double>(m) - alpha);
    const double den = std::lgamma(static_cast<double>(m) + 1.0);
    // Gamma(m - alpha) for m >= 1, alpha < m is positive; m = 0 gives
    // Gamma(-alpha) whose sign cancels with the denominator's.
    if (m == 0) return 1.0;
    double sign_num = 1.0;
    double lnum = num;
    if (static_cast<double>(m) - alpha < 0.0) {
        const double x = static_cast<double>(m) - alpha;
        const long fl = static_cast<long>(std::floor(x));
        sign_num = (fl % 2 == 0) ? 1.0 : -1.0;
        lnum = std::lgamma(x);
    }
    const double g_neg_alpha = gamma_signed(-alpha);
    return sign_num * std::exp(lnum - den) / g_neg_alpha;
}

// Deterministic pseudo-random doubles in [lo, hi] (fixed-seed LCG).
class Lcg {
  public:
    explicit Lcg(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : s_(seed) {}
    double uniform(double lo, double hi) {
        s_ = s_ * 6364136223846793005ull + 1442695040888963407ull;
        const double u = static_cast<double>((s_ >> 11) & ((1ull << 53) - 1)) /
                         static_cast<double>(1ull << 53);
        return lo + (hi - lo) * u;
    }

  private:
    std::uint64_t s_;
};

inline double slope_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
        den += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
    }
    return num / den;
}

} // namespace testutil

#include "grunwald/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace grunwald {

namespace {

double simpson_rec(const RealFn& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, double rel_tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = left + right - whole;
    const double accept = std::max(15.0 * tol, 15.0 * rel_tol * std::abs(left + right));
    if (std::abs(err) <= accept || (b - a) <= 1e-15 * (std::abs(a) + std::abs(b)) ||
        (b - a) < 1e-300)
        return left + right + err / 15.0;
    if (depth <= 0) {
        if (std::abs(err) > 1e6 * std::max(tol, rel_tol * std::abs(left + right)))
            throw QuadratureFailure("adaptive_simpson: refinement stalled");
        return left + right + err / 15.0;
    }
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, rel_tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, rel_tol, depth - 1);
}

} // namespace

double adaptive_simpson(const RealFn& f, double a, double b, double abs_tol, int max_depth,
                        double rel_tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, rel_tol, max_depth);
}

double adaptive_simpson_panels(const RealFn& f, const std::vector<double>& breaks,
                               double abs_tol, int max_depth, double rel_tol) {
    std::vector<double> pts = breaks;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2) return 0.0;
    const double per_panel = abs_tol / static_cast<double>(pts.size() - 1);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        total += adaptive_simpson(f, pts[i], pts[i + 1], per_panel, max_depth, rel_tol);
    return total;
}

} // namespace grunwald

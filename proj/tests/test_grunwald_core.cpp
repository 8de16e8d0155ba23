#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grunwald/schemes.hpp"
#include "grunwald/symbols.hpp"
#include "grunwald/types.hpp"
#include "grunwald/weights.hpp"
#include "test_util.hpp"

using namespace grunwald;

namespace {

GridFunction sample_power(double mu, double h, std::size_t n, Domain dom) {
    GridFunction f;
    f.h = h;
    f.origin_index = 0;
    f.domain = dom;
    f.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        f.samples[i] = (i == 0 && mu < 0.0) ? 0.0 : std::pow(h * static_cast<double>(i), mu);
    return f;
}

} // namespace

TEST_CASE("FracOrder q and sign") {
    CHECK(FracOrder(0.8).q() == 0);
    CHECK(FracOrder(1.8).q() == 1);
    CHECK(FracOrder(2.5).q() == 1);
    CHECK(FracOrder(4.6).q() == 2);
    CHECK(FracOrder(0.8).sign() == doctest::Approx(-1.0));
    CHECK(FracOrder(1.8).sign() == doctest::Approx(1.0));
    CHECK_THROWS_AS(FracOrder(0.0), PreconditionError);
    CHECK_THROWS_AS(FracOrder(-1.2), PreconditionError);
    // odd integers are admitted for weight/assembly use but flagged for
    // dichotomy-sensitive operations
    CHECK(FracOrder(1.0).q() == 1);
    CHECK_THROWS_AS(optimal_shift(FracOrder(1.0)), PreconditionError);
}

TEST_CASE("grunwald_weights: integer orders") {
    const auto w1 = grunwald_weights(FracOrder(1.0), 3);
    CHECK(w1[0] == doctest::Approx(1.0));
    CHECK(w1[1] == doctest::Approx(-1.0));
    CHECK(w1[2] == doctest::Approx(0.0));
    CHECK(w1[3] == doctest::Approx(0.0));

    const auto w2 = grunwald_weights(FracOrder(2.0), 3);
    CHECK(w2[0] == doctest::Approx(1.0));
    CHECK(w2[1] == doctest::Approx(-2.0));
    CHECK(w2[2] == doctest::Approx(1.0));
    CHECK(w2[3] == doctest::Approx(0.0));
}

TEST_CASE("grunwald_weights: alpha = 0.8 against the Gamma formula") {
    const auto w = grunwald_weights(FracOrder(0.8), 2);
    CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w[1] == doctest::Approx(-0.8).epsilon(1e-14));
    CHECK(w[2] == doctest::Approx(-0.08).epsilon(1e-14));
    for (long m = 0; m <= 2; ++m)
        CHECK(w[static_cast<std::size_t>(m)] ==
              doctest::Approx(testutil::weight_gamma_formula(0.8, m)).epsilon(1e-12));
}

TEST_CASE("grunwald_weights: recurrence equals Gamma formula to 1e-12 for m <= 60") {
    for (double alpha : {0.3, 0.8, 1.5, 1.8, 2.5}) {
        const auto w = grunwald_weights(FracOrder(alpha), 60);
        for (long m = 0; m <= 60; ++m) {
            const double ref = testutil::weight_gamma_formula(alpha, m);
            CHECK(std::abs(w[static_cast<std::size_t>(m)] - ref) <=
                  1e-12 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("grunwald_weights: sign pattern and partial sums") {
    // 1 < alpha < 2: all weights except w_1 share one sign (positive)
    for (double alpha : {1.2, 1.5, 1.8}) {
        const auto w = grunwald_weights(FracOrder(alpha), 200);
        CHECK(w[0] > 0.0);
        CHECK(w[1] < 0.0);
        for (std::size_t m = 2; m <= 200; ++m) CHECK(w[m] > 0.0);
    }
    // 0 < alpha < 1, p = 0: all weights except w_0 negative
    for (double alpha : {0.3, 0.8}) {
        const auto w = grunwald_weights(FracOrder(alpha), 200);
        CHECK(w[0] > 0.0);
        for (std::size_t m = 1; m <= 200; ++m) CHECK(w[m] < 0.0);
    }
    // partial sums decrease monotonically in magnitude toward zero
    const auto w = grunwald_weights(FracOrder(1.5), 400);
    double s = w[0] + w[1];
    double prev = std::abs(s);
    for (std::size_t m = 2; m <= 400; ++m) {
        s += w[m];
        CHECK(std::abs(s) <= prev + 1e-15);
        prev = std::abs(s);
    }
    CHECK(std::abs(s) < 0.02);
}

TEST_CASE("apply_shifted_grunwald: first derivative of x^3") {
    // interior x = 2 on [0,4], alpha = 1, p = 0: backward difference, O(h)
    const double h = 0.01;
    auto f = sample_power(3.0, h, 401, Domain::Interval);
    f.a = 0.0;
    f.b = 4.0;
    const auto g = apply_shifted_grunwald(f, FracOrder(1.0), 0.0);
    CHECK(g.samples[200] == doctest::Approx(12.0).epsilon(0.01));
}

TEST_CASE("apply_shifted_grunwald: zero input, zero output") {
    GridFunction f;
    f.h = 0.1;
    f.samples.assign(64, 0.0);
    const auto g = apply_shifted_grunwald(f, FracOrder(0.7), 0.0);
    for (double v : g.samples) CHECK(v == 0.0);
}

TEST_CASE("apply_shifted_grunwald: half-line power function") {
    // f = x on the half line, alpha = 0.5: D^{1/2} x = Gamma(2)/Gamma(1.5) x^{1/2}
    const double h = 1e-3;
    auto f = sample_power(1.0, h, 1201, Domain::HalfLine);
    const auto g = apply_shifted_grunwald(f, FracOrder(0.5), 0.0);
    const double expect = std::tgamma(2.0) / std::tgamma(1.5); // ~1.1284 at x = 1
    CHECK(g.samples[1000] == doctest::Approx(expect).epsilon(0.01));
}

TEST_CASE("apply_shifted_grunwald: non-integer shift rejected") {
    GridFunction f;
    f.h = 0.1;
    f.samples.assign(32, 1.0);
    CHECK_THROWS_AS(apply_shifted_grunwald(f, FracOrder(0.8), 0.5), NonIntegerShift);
}

TEST_CASE("apply_scheme: degenerate single-term combination") {
    auto f = sample_power(2.0, 0.05, 128, Domain::HalfLine);
    const FracOrder order(1.8);
    const Scheme s = make_single_term_scheme(order, 1.0);
    const auto via_scheme = apply_scheme(f, s);
    const auto direct = apply_shifted_grunwald(f, order, 1.0);
    for (std::size_t i = 0; i < f.samples.size(); ++i)
        CHECK(via_scheme.samples[i] == doctest::Approx(direct.samples[i]).epsilon(1e-14));
}

TEST_CASE("apply_scheme: linearity to machine precision") {
    testutil::Lcg rng;
    GridFunction f, g;
    f.h = g.h = 0.1;
    f.samples.resize(200);
    g.samples.resize(200);
    for (std::size_t i = 0; i < 200; ++i) {
        f.samples[i] = rng.uniform(-1.0, 1.0);
        g.samples[i] = rng.uniform(-1.0, 1.0);
    }
    GridFunction sum = f;
    for (std::size_t i = 0; i < 200; ++i) sum.samples[i] += g.samples[i];

    const Scheme s = second_order_scheme(FracOrder(1.8));
    const auto a = apply_scheme(f, s);
    const auto b = apply_scheme(g, s);
    const auto c = apply_scheme(sum, s);
    for (std::size_t i = 0; i < 200; ++i)
        CHECK(c.samples[i] == doctest::Approx(a.samples[i] + b.samples[i]).epsilon(1e-12));
}

TEST_CASE("apply_scheme: translation equivariance on interior-supported data") {
    // bump supported well inside the grid; shifting input by one cell shifts
    // output by one cell exactly
    GridFunction f;
    f.h = 0.05;
    f.origin_index = 100;
    f.samples.assign(201, 0.0);
    for (std::size_t i = 60; i <= 140; ++i) {
        const double x = f.x(i);
        f.samples[i] = std::exp(-10.0 * x * x);
    }
    GridFunction shifted = f;
    for (std::size_t i = 200; i >= 1; --i) shifted.samples[i] = f.samples[i - 1];
    shifted.samples[0] = 0.0;

    const Scheme s = second_order_scheme(FracOrder(1.8));
    const auto a = apply_scheme(f, s);
    const auto b = apply_scheme(shifted, s);
    for (std::size_t i = 30; i <= 170; ++i)
        CHECK(b.samples[i] == a.samples[i - 1]); // bitwise: same sums
}

TEST_CASE("second_order_scheme coefficients") {
    const Scheme s18 = second_order_scheme(FracOrder(1.8));
    REQUIRE(s18.terms.size() == 2);
    CHECK(s18.terms[0].weight == doctest::Approx(2.0 - 2.0 / 1.8).epsilon(1e-15));
    CHECK(s18.terms[0].scale == doctest::Approx(1.0));
    CHECK(s18.terms[0].shift == doctest::Approx(1.0));
    CHECK(s18.terms[1].weight == doctest::Approx(2.0 / 1.8 - 1.0).epsilon(1e-15));
    CHECK(s18.terms[1].scale == doctest::Approx(2.0));
    CHECK(s18.terms[1].shift == doctest::Approx(0.5));

    const Scheme s05 = second_order_scheme(FracOrder(0.5));
    REQUIRE(s05.terms.size() == 2);
    CHECK(s05.terms[0].weight == doctest::Approx(2.0));
    CHECK(s05.terms[0].scale == doctest::Approx(1.0));
    CHECK(s05.terms[0].shift == doctest::Approx(0.0));
    CHECK(s05.terms[1].weight == doctest::Approx(-1.0));
    CHECK(s05.terms[1].scale == doctest::Approx(2.0));
    CHECK(s05.terms[1].shift == doctest::Approx(0.0));

    for (const Scheme& s : {s18, s05}) {
        double sum = 0.0;
        for (const auto& t : s.terms) sum += t.weight;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK_THROWS_AS(second_order_scheme(FracOrder(2.5)), UnsupportedOrder);
}

TEST_CASE("third_order_scheme coefficients") {
    const double alpha = 1.8;
    const Scheme s = third_order_scheme(FracOrder(alpha));
    REQUIRE(s.terms.size() == 3);
    const double a = (7.0 - 8.0 * alpha + 3.0 * alpha * alpha) / (3.0 * (alpha - 1.0));
    const double b = (-7.0 + 3.0 * alpha) / (3.0 * (alpha - 1.0));
    CHECK(s.terms[0].weight == doctest::Approx(a).epsilon(1e-15));
    CHECK(s.terms[0].weight == doctest::Approx(0.9666666666666667).epsilon(1e-12));
    CHECK(s.terms[1].weight == doctest::Approx(b).epsilon(1e-15));
    CHECK(s.terms[1].weight == doctest::Approx(-0.6666666666666666).epsilon(1e-12));
    CHECK(s.terms[2].weight == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(s.terms[0].weight + s.terms[1].weight + s.terms[2].weight ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(taylor_cancellation_check(s, 2) < 1e-12);
    CHECK_THROWS_AS(third_order_scheme(FracOrder(0.8)), UnsupportedOrder);
}

TEST_CASE("solve_scheme_coefficients recovers the published sets") {
    const FracOrder order(1.8);
    SUBCASE("second-order pair") {
        const auto b = solve_scheme_coefficients(order, {{1.0, 1.0}, {2.0, 0.5}}, 1);
        REQUIRE(b.size() == 2);
        CHECK(b[0] == doctest::Approx(2.0 - 2.0 / 1.8).epsilon(1e-13));
        CHECK(b[1] == doctest::Approx(2.0 / 1.8 - 1.0).epsilon(1e-13));
    }
    SUBCASE("third-order triple") {
        const auto b = solve_scheme_coefficients(order, {{1.0, 1.0}, {2.0, 0.5}, {1.0, 0.0}}, 2);
        const Scheme ref = third_order_scheme(order);
        REQUIRE(b.size() == 3);
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(b[j] == doctest::Approx(ref.terms[j].weight).epsilon(1e-12));
    }
    SUBCASE("trivial single pair") {
        const auto b = solve_scheme_coefficients(order, {{1.0, 1.0}}, 0);
        REQUIRE(b.size() == 1);
        CHECK(b[0] == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("duplicated pairs are singular") {
        CHECK_THROWS_AS(solve_scheme_coefficients(order, {{1.0, 1.0}, {1.0, 1.0}}, 1),
                        SingularSystem);
    }
}

TEST_CASE("scheme_from_pairs equals third_order_scheme term by term") {
    const FracOrder order(1.8);
    const Scheme s = scheme_from_pairs(order, {{1.0, 1.0}, {2.0, 0.5}, {1.0, 0.0}}, 2);
    const Scheme ref = third_order_scheme(order);
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(s.terms[j].weight == doctest::Approx(ref.terms[j].weight).epsilon(1e-12));
}

#include <catch2/catch_amalgamated.hpp>

#include "egflab/saddle.hpp"

using namespace egf;

static RationalSeries poly(unsigned order, std::vector<Rational> low) {
    std::vector<Rational> c(order + 1, Rational(0));
    for (size_t i = 0; i < low.size(); ++i) c[i] = low[i];
    return RationalSeries(order, std::move(c));
}

TEST_CASE("saddle point for G = x is r = n", "[saddle]") {
    PrecisionGuard guard(256);
    auto g = poly(1, {0, 1});
    for (unsigned n : {1u, 5u, 10u, 40u}) {
        BigFloat r = solve_saddle(g, n);
        REQUIRE(compare_with_tolerance(r, BigFloat(n), BigFloat("1e-25")) ==
                Ordering::Equal);
    }
}

TEST_CASE("saddle point for G = x + x^2 at n = 10", "[saddle]") {
    PrecisionGuard guard(256);
    // x + 2x^2 = 10 -> 2r^2 + r - 10 = 0 -> r = 2
    BigFloat r = solve_saddle(poly(2, {0, 1, 1}), 10);
    REQUIRE(compare_with_tolerance(r, BigFloat(2), BigFloat("1e-25")) ==
            Ordering::Equal);
}

TEST_CASE("saddle point for a single term matches the closed form", "[saddle]") {
    PrecisionGuard guard(256);
    // G = c x^d: x G'(x) = c d x^d = n  =>  r = (n / (c d))^{1/d}
    // G = x^3, n = 6: r = (6/3)^{1/3} = 2^{1/3}
    BigFloat r = solve_saddle(poly(3, {0, 0, 0, 1}), 6);
    BigFloat want = pow(BigFloat(2), BigFloat(1) / 3);
    REQUIRE(compare_with_tolerance(r, want, BigFloat("1e-25")) == Ordering::Equal);

    // G = (3/2) x^2, n = 12: r = (12/3)^{1/2} = 2
    BigFloat r2 = solve_saddle(poly(2, {0, 0, Rational(3, 2)}), 12);
    REQUIRE(compare_with_tolerance(r2, BigFloat(2), BigFloat("1e-25")) ==
            Ordering::Equal);
}

TEST_CASE("saddle points increase with n", "[saddle]") {
    PrecisionGuard guard(256);
    auto g = poly(3, {0, 1, Rational(1, 2), Rational(1, 3)});
    BigFloat prev = 0;
    for (unsigned n = 1; n <= 50; ++n) {
        BigFloat r = solve_saddle(g, n);
        REQUIRE(r > prev);
        prev = r;
    }
}

TEST_CASE("saddle estimate for G = x approaches Stirling accuracy", "[saddle]") {
    PrecisionGuard guard(256);
    auto g = poly(1, {0, 1});
    auto rep10 = hayman_estimate(g, 10);
    // exact value is 1/10!; relative error ~ 1/(12n) ~ 0.83%
    REQUIRE(rep10.exact == Rational(1) / factorial(10));
    REQUIRE(rep10.rel_err > BigFloat("0.0075"));
    REQUIRE(rep10.rel_err < BigFloat("0.0092"));

    auto rep100 = hayman_estimate(g, 100);
    REQUIRE(rep100.rel_err < BigFloat("0.001"));
    REQUIRE(rep100.rel_err < rep10.rel_err);
}

TEST_CASE("saddle estimate for G = x + x^2 is within a percent at n = 10",
          "[saddle]") {
    PrecisionGuard guard(256);
    auto rep = hayman_estimate(poly(2, {0, 1, 1}), 10);
    REQUIRE(rep.exact > 0);
    REQUIRE(rep.rel_err < BigFloat("0.01"));
    REQUIRE(compare_with_tolerance(rep.r_n, BigFloat(2), BigFloat("1e-25")) ==
            Ordering::Equal);
}

TEST_CASE("saddle rejects degenerate series", "[saddle]") {
    auto zero = poly(4, {0});
    REQUIRE_THROWS_AS(solve_saddle(zero, 5), std::invalid_argument);
    auto with_constant = poly(4, {1, 1});
    REQUIRE_THROWS_AS(solve_saddle(with_constant, 5), std::invalid_argument);
    std::vector<Rational> neg(5, Rational(0));
    neg[1] = -1;
    REQUIRE_THROWS_AS(solve_saddle(RationalSeries(4, std::move(neg)), 5),
                      std::invalid_argument);
}

TEST_CASE("exponent fit tracks the growth exponent", "[saddle]") {
    PrecisionGuard guard(256);
    // f = exp(x): f(n) = 1/n!, so n-th coefficient has
    // s(n) = -log f(n) / (n log n) -> 1 as n grows
    auto g = poly(1, {0, 1});
    auto fit = exponent_fit(g, {10, 50, 100});
    REQUIRE(fit.s.size() == 3);
    BigFloat d10 = abs(fit.s[0].second - 1);
    BigFloat d100 = abs(fit.s[2].second - 1);
    REQUIRE(d100 < d10);
    REQUIRE(abs(fit.drift_last) < abs(fit.drift_first));
}

TEST_CASE("saddle report serialization is stable", "[saddle]") {
    PrecisionGuard guard(256);
    auto rep = hayman_estimate(poly(2, {0, 1, 1}), 12);
    auto j1 = saddle_report_to_json(rep);
    auto j2 = saddle_report_to_json(hayman_estimate(poly(2, {0, 1, 1}), 12));
    REQUIRE(j1 == j2);
    REQUIRE(j1.contains("r_n"));
    REQUIRE(j1.contains("rel_err"));
}

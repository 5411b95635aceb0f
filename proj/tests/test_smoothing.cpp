#include <catch2/catch_amalgamated.hpp>

#include "egflab/smoothing.hpp"

using namespace egf;

static RationalSeries poly(unsigned order, std::vector<Rational> low) {
    std::vector<Rational> c(order + 1, Rational(0));
    for (size_t i = 0; i < low.size(); ++i) c[i] = low[i];
    return RationalSeries(order, std::move(c));
}

TEST_CASE("cr bound for the factorial-weight series", "[smoothing]") {
    // g(n) = 1/n!, split at ell = 2, L = 2 (support contains 1)
    auto g = RationalSeries::from_rule(
        *SequenceRule::power_over_factorial(Rational(0), true), 60);
    auto split = split_at(g, 2);
    for (int r : {-1, 0, 1, 2}) {
        auto cb = cr_bound(g, split, r, 2);
        REQUIRE(cb.value > 0);
        // the bound is what it claims: re-check every window index
        auto f0 = series_exp(split.low);
        for (unsigned n = cb.window_lo; n <= cb.window_hi; ++n) {
            if (g[n] == 0) continue;
            REQUIRE(Rational(n) * g[n] <=
                    cb.value * f0[static_cast<unsigned>(n + r)]);
        }
        auto chk = lemma31_check(g, split, cb);
        REQUIRE(chk.holds);
        REQUIRE(chk.max_quotient <= cb.value);
    }
}

TEST_CASE("cr bound rejects shifts below -1", "[smoothing]") {
    auto g = poly(10, {0, 1, 1, 1});
    auto split = split_at(g, 2);
    REQUIRE_THROWS_AS(cr_bound(g, split, -2, 2), std::invalid_argument);
}

TEST_CASE("convolution inequality holds across shifts for a gcd-1 support",
          "[smoothing]") {
    // g supported on {2,3}: certified onset at L = 3; split at ell = 3? the
    // high part must keep g(ell) so split below the top of the support
    auto g = RationalSeries::from_rule(*SequenceRule::binary_support({2, 3}), 50);
    auto split = split_at(g, 3);
    for (int r : {-1, 0, 1, 2}) {
        auto cb = cr_bound(g, split, r, 3);
        auto chk = lemma31_check(g, split, cb);
        REQUIRE(chk.holds);
    }
}

TEST_CASE("degenerate split: empty high part gives trivial f1", "[smoothing]") {
    auto g = poly(20, {0, 1, 1});
    auto split = split_at(g, 2);  // high part is zero
    auto f1 = series_exp(split.high);
    REQUIRE(f1[0] == 1);
    for (unsigned n = 1; n <= 20; ++n) REQUIRE(f1[n] == 0);
    auto cb = cr_bound(g, split, 0, 2);
    auto chk = lemma31_check(g, split, cb);
    REQUIRE(chk.holds);
}

TEST_CASE("epsilon envelope for exp(x) is (1 + 1e-6)/n", "[smoothing]") {
    // f0(n) = 1/n!, ratio f0(n)/f0(n-1) = 1/n which already decreases, so the
    // suffix max at n is 1/n itself
    auto f0 = series_exp(poly(40, {0, 1}));
    auto env = epsilon_envelope(f0, 4, 40);
    REQUIRE(env.size() == 37);
    for (const auto& [n, eps] : env) {
        REQUIRE(eps == Rational(1000001, 1000000) / n);
        REQUIRE(eps > Rational(1, n));  // strictly above the true ratio
    }
    // monotone nonincreasing and below 1 at the end
    for (size_t i = 1; i < env.size(); ++i)
        REQUIRE(env[i].second <= env[i - 1].second);
    REQUIRE(env.back().second < 1);
}

TEST_CASE("epsilon envelope input validation", "[smoothing]") {
    auto f0 = series_exp(poly(20, {0, 1}));
    REQUIRE_THROWS_AS(epsilon_envelope(f0, 5, 6), insufficient_data);
    auto fzero = series_exp(poly(20, {0, 0, 1}));  // vanishes at odd n
    REQUIRE_THROWS_AS(epsilon_envelope(fzero, 2, 20), std::invalid_argument);
}

TEST_CASE("theorem demo on floor(n^(n/2))/n!", "[smoothing]") {
    PrecisionGuard guard(256);
    auto rule = SequenceRule::power_over_factorial(Rational(1, 2), true);
    TrendConfig cfg;
    auto rep = theorem_demo(*rule, Rational(1, 2), 120, cfg);

    REQUIRE(rep.L >= 2);
    REQUIRE(rep.ell > static_cast<unsigned>(rep.L));
    // 1/ell < 1 - theta = 1/2  =>  ell >= 3
    REQUIRE(rep.ell >= 3);
    REQUIRE(rep.cr_table.size() == 4);
    REQUIRE(rep.lemma_max_quotients.size() == 4);
    for (size_t i = 0; i < 4; ++i)
        REQUIRE(rep.lemma_max_quotients[i] <= rep.cr_table[i].value);
    // hypothesis constant is attained and at most 1 (c = 1 normalization)
    REQUIRE(rep.hypothesis_constant > 0);
    REQUIRE(rep.hypothesis_constant <= BigFloat(1) + BigFloat("1e-30"));
    // epsilon table is monotone nonincreasing and ends below 1
    for (size_t i = 1; i < rep.epsilon_table.size(); ++i)
        REQUIRE(rep.epsilon_table[i].second <= rep.epsilon_table[i - 1].second);
    REQUIRE(rep.epsilon_table.back().second < 1);
    // ratio evidence: the ratio sequence grows across the window
    const auto& pts = rep.ratios.points;
    REQUIRE(pts.back().ratio > pts.front().ratio);

    auto j = theorem_demo_to_json(rep);
    REQUIRE(j == theorem_demo_to_json(theorem_demo(*rule, Rational(1, 2), 120, cfg)));
}

TEST_CASE("theorem demo on the factorial-weight series", "[smoothing]") {
    // g(n) = 1/n! satisfies the hypothesis for theta = 1/2 with c = 1
    auto rule = SequenceRule::power_over_factorial(Rational(0), true);
    auto rep = theorem_demo(*rule, Rational(1, 2), 80);
    REQUIRE(rep.ell >= 3);
    for (size_t i = 0; i < rep.cr_table.size(); ++i)
        REQUIRE(rep.lemma_max_quotients[i] <= rep.cr_table[i].value);
}

TEST_CASE("theorem demo rejects a failing hypothesis with a witness",
          "[smoothing]") {
    // g(n) = n^n/n! violates g(n) n! <= n^(n/2) already at n = 2 (4 > 2)
    auto rule = SequenceRule::power_over_factorial(Rational(1), true);
    REQUIRE_THROWS_AS(theorem_demo(*rule, Rational(1, 2), 40), check_failure);
    REQUIRE_THROWS_WITH(theorem_demo(*rule, Rational(1, 2), 40),
                        Catch::Matchers::ContainsSubstring("n=2"));
}

TEST_CASE("theorem demo rejects gcd > 1 support", "[smoothing]") {
    auto rule = SequenceRule::binary_support({2, 4});
    REQUIRE_THROWS_AS(theorem_demo(*rule, Rational(1, 2), 40),
                      std::invalid_argument);
}

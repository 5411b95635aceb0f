#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "egflab/diagnostics.hpp"
#include "egflab/oracles.hpp"

using namespace egf;

static RationalSeries exp_of_rule(const SequenceRule& rule, unsigned N,
                                  bool egf_weight) {
    return series_exp(RationalSeries::from_rule(rule, N, egf_weight));
}

TEST_CASE("ratios of 1/n! diverge like n", "[diagnostics]") {
    auto f = exp_of_rule(*SequenceRule::explicit_list({Rational(0), Rational(1)}),
                         60, false);
    TrendConfig cfg;
    auto rep = ratio_sequence(f, 1, cfg);
    for (const auto& pt : rep.points) {
        REQUIRE(pt.defined);
        REQUIRE(pt.ratio == BigFloat(pt.n));  // 1/(n-1)! over 1/n! = n
    }
    REQUIRE(rep.trend == Trend::Diverging);
}

TEST_CASE("integer partition ratios tend to one", "[diagnostics]") {
    PrecisionGuard guard(256);
    auto a = euler_product(*SequenceRule::constant_one(), 200);
    TrendConfig cfg;
    auto rep = ratio_sequence(a, 2, cfg);
    // frozen anchor value: p(29)/p(30) = 4565/5604
    bool found = false;
    for (const auto& pt : rep.points) {
        if (pt.n == 30) {
            found = true;
            BigFloat want = BigFloat(4565) / BigFloat(5604);
            REQUIRE(compare_with_tolerance(pt.ratio, want, BigFloat("1e-50")) ==
                    Ordering::Equal);
        }
    }
    REQUIRE(found);
    // with the default delta = 0.05 the window is too short: the gap
    // 1 - rho(n) decays like pi/sqrt(6n) and is still 0.082 at n = 200
    REQUIRE(rep.trend == Trend::Inconclusive);

    TrendConfig wide = cfg;
    wide.delta = 0.1;
    REQUIRE(ratio_sequence(a, 2, wide).trend == Trend::TendingToOne);
}

TEST_CASE("undefined ratio points are first-class", "[diagnostics]") {
    // exp(x^2): odd coefficients vanish, so every other ratio is 0/positive
    // and the ratio at even n has a zero numerator's neighbour
    auto f = exp_of_rule(*SequenceRule::binary_support({2}), 30, false);
    TrendConfig cfg;
    auto rep = ratio_sequence(f, 1, cfg);
    size_t undefined = 0;
    for (const auto& pt : rep.points)
        if (!pt.defined) ++undefined;
    REQUIRE(undefined == 15);  // every odd n in [1, 30]
    // the defined ratios are all 0/positive, labelled as tending to zero
    REQUIRE(rep.trend == Trend::TendingToZero);
}

TEST_CASE("all-zero window raises insufficient_data", "[diagnostics]") {
    std::vector<Rational> c(21, Rational(0));
    c[0] = 1;
    RationalSeries f(20, std::move(c));
    TrendConfig cfg;
    REQUIRE_THROWS_AS(ratio_sequence(f, 5, cfg), insufficient_data);
}

TEST_CASE("frobenius numbers: known values", "[diagnostics]") {
    REQUIRE(frobenius_number({2, 3}) == 1);
    REQUIRE(frobenius_number({3, 5}) == 7);
    REQUIRE(frobenius_number({6, 10, 15}) == 29);
    REQUIRE(frobenius_number({1}) == -1);  // everything representable
    REQUIRE(frobenius_number({1, 4}) == -1);
}

TEST_CASE("frobenius agrees with brute-force representability", "[diagnostics]") {
    std::vector<std::set<unsigned>> supports = {
        {2, 3}, {3, 5}, {4, 7}, {6, 10, 15}};
    for (const auto& s : supports) {
        long frob = frobenius_number(s);
        // brute force: which n <= frob + 50 are nonneg integer combinations
        long limit = frob + 50;
        std::vector<char> reachable(limit + 1, 0);
        reachable[0] = 1;
        for (long n = 1; n <= limit; ++n)
            for (unsigned v : s)
                if (n >= static_cast<long>(v) && reachable[n - v]) reachable[n] = 1;
        REQUIRE_FALSE(reachable[frob]);
        for (long n = frob + 1; n <= limit; ++n) REQUIRE(reachable[n] == 1);
    }
}

TEST_CASE("support profile and gcd", "[diagnostics]") {
    auto g = RationalSeries::from_rule(*SequenceRule::binary_support({6, 10, 15}),
                                       40, false);
    auto prof = support_gcd(g, 40);
    REQUIRE(prof.support == std::set<unsigned>{6, 10, 15});
    REQUIRE(prof.gcd == 1);
    REQUIRE(prof.frobenius_bound.has_value());
    REQUIRE(*prof.frobenius_bound == 29);

    auto geven = RationalSeries::from_rule(*SequenceRule::binary_support({4, 6}),
                                           20, false);
    auto prof2 = support_gcd(geven, 20);
    REQUIRE(prof2.gcd == 2);
    REQUIRE_FALSE(prof2.frobenius_bound.has_value());
}

TEST_CASE("positivity onset via frobenius certificate", "[diagnostics]") {
    // g supported on {2,3}: frobenius 1, so f(n) > 0 for all n >= 2
    auto g = RationalSeries::from_rule(*SequenceRule::binary_support({2, 3}), 40,
                                       false);
    auto res = positivity_onset(g, 3);
    REQUIRE(res.verdict == OnsetVerdict::Certified);
    REQUIRE(res.frobenius == 1);
    // L = 2 truncates the support to {2}, gcd 2: no certificate
    REQUIRE(positivity_onset(g, 2).verdict == OnsetVerdict::Fails);
    REQUIRE(smallest_certified_onset(g) == 3);

    // gcd 2 support can never certify an onset
    auto geven = RationalSeries::from_rule(*SequenceRule::binary_support({2, 4}),
                                           40, false);
    REQUIRE(positivity_onset(geven, 10).verdict == OnsetVerdict::Fails);
    REQUIRE(smallest_certified_onset(geven) == -1);
}

TEST_CASE("onset for {6,10,15} certifies exactly at the frobenius number",
          "[diagnostics]") {
    auto g = RationalSeries::from_rule(*SequenceRule::binary_support({6, 10, 15}),
                                       80, false);
    REQUIRE(smallest_certified_onset(g, 80) == 29);
    REQUIRE(positivity_onset(g, 28).verdict == OnsetVerdict::Fails);
    REQUIRE(positivity_onset(g, 29).verdict == OnsetVerdict::Certified);
    // cross-check: exp(g) really is positive past 29 and vanishes at 29
    auto f = series_exp(g);
    for (unsigned n = 30; n <= 80; ++n) REQUIRE(f[n] > 0);
    REQUIRE(f[29] == 0);
}

TEST_CASE("trend classification is deterministic", "[diagnostics]") {
    auto a = euler_product(*SequenceRule::constant_one(), 120);
    TrendConfig cfg;
    auto r1 = ratio_sequence(a, 2, cfg);
    auto r2 = ratio_sequence(a, 2, cfg);
    REQUIRE(r1.trend == r2.trend);
    REQUIRE(ratio_report_to_json(r1) == ratio_report_to_json(r2));
}

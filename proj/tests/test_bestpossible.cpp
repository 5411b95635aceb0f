#include <catch2/catch_amalgamated.hpp>

#include "egflab/bestpossible.hpp"

using namespace egf;

TEST_CASE("h values: frozen anchors", "[bestpossible]") {
    PrecisionGuard guard(256);
    // h_1(n) = n^(n/2)/n!: h_1(2) = 2/2 = 1, h_1(3) = 3^(3/2)/6 = sqrt(3)/2
    REQUIRE(compare_with_tolerance(h_value(1, 2), BigFloat(1), BigFloat("1e-40")) ==
            Ordering::Equal);
    BigFloat want3 = sqrt(BigFloat(3)) / 2;
    REQUIRE(compare_with_tolerance(h_value(1, 3), want3, BigFloat("1e-40")) ==
            Ordering::Equal);
    // h_3(4) = 4^(20/6)/24 = 2^(20/3)/24
    BigFloat want34 = pow(BigFloat(2), BigFloat(20) / 3) / 24;
    REQUIRE(compare_with_tolerance(h_value(3, 4), want34, BigFloat("1e-40")) ==
            Ordering::Equal);
    REQUIRE(h_value(3, 4) > BigFloat("4.23"));
    REQUIRE(h_value(3, 4) < BigFloat("4.24"));
}

TEST_CASE("threshold set membership for t = n^n/n!", "[bestpossible]") {
    auto t = SequenceRule::power_over_factorial(Rational(1), false);
    // t(n) > n^(n/2)/n! iff n^(n/2) > 1, i.e. all n >= 2
    REQUIRE_FALSE(s_theta_member(*t, Rational(1, 2), 1));
    for (unsigned n = 2; n <= 30; ++n)
        REQUIRE(s_theta_member(*t, Rational(1, 2), n));
}

TEST_CASE("membership rejects values inside the tie tolerance", "[bestpossible]") {
    // t(n) = n^(n/2)/n! equals the threshold exactly: never a member
    auto t = SequenceRule::power_over_factorial(Rational(1, 2), false);
    for (unsigned n = 1; n <= 10; ++n)
        REQUIRE_FALSE(s_theta_member(*t, Rational(1, 2), n));
}

TEST_CASE("staged construction for t = n^n/n! picks degrees 1, 3, 4",
          "[bestpossible]") {
    PrecisionGuard guard(256);
    auto t = SequenceRule::power_over_factorial(Rational(1), false);
    auto res = build_counterexample(*t, 1, 3, 60);

    REQUIRE(res.stages.size() == 3);
    REQUIRE(res.stages[0].degree == 1);
    REQUIRE(res.stages[1].degree == 3);
    REQUIRE(res.stages[2].degree == 4);
    REQUIRE_FALSE(res.stages[0].has_added_coeff);
    REQUIRE(res.stages[1].has_added_coeff);

    // stage 2 adds h_1(3) = sqrt(3)/2 at degree 3
    REQUIRE(compare_with_tolerance(res.stages[1].added_coeff,
                                   sqrt(BigFloat(3)) / 2,
                                   BigFloat("1e-40")) == Ordering::Equal);
    // stage 3 adds h_3(4)
    REQUIRE(compare_with_tolerance(res.stages[2].added_coeff, h_value(3, 4),
                                   BigFloat("1e-40")) == Ordering::Equal);

    // each added stage makes the ratio exceed 1 at its degree
    for (size_t i = 1; i < res.stages.size(); ++i)
        REQUIRE(res.stages[i].ratio_at_d > 1);
    // and the final series still violates monotone decay at those degrees
    REQUIRE(res.violations.size() == 2);
    REQUIRE(res.violations[0].first == 3);
    REQUIRE(res.violations[1].first == 4);
    for (const auto& [d, ratio] : res.violations) REQUIRE(ratio > 1);
}

TEST_CASE("constructed g stays dominated by t", "[bestpossible]") {
    PrecisionGuard guard(256);
    auto t = SequenceRule::power_over_factorial(Rational(1), false);
    auto res = build_counterexample(*t, 1, 3, 60);
    const BigFloat tol("1e-40");
    for (unsigned n = 1; n <= res.g.order(); ++n) {
        if (res.g[n] == 0) continue;
        REQUIRE(res.g[n] <= t->eval_float(n) + tol);
    }
    // degrees strictly increase across stages
    for (size_t i = 1; i < res.stages.size(); ++i)
        REQUIRE(res.stages[i].degree > res.stages[i - 1].degree);
}

TEST_CASE("single stage produces no violations", "[bestpossible]") {
    auto t = SequenceRule::power_over_factorial(Rational(1), false);
    auto res = build_counterexample(*t, 1, 1, 60);
    REQUIRE(res.stages.size() == 1);
    REQUIRE(res.violations.empty());
}

TEST_CASE("stage 2 degree skips n = 2 because h_1(2) is not large enough",
          "[bestpossible]") {
    PrecisionGuard guard(256);
    auto t = SequenceRule::power_over_factorial(Rational(1), false);
    // after stage 1, g = x and f_1 = exp(x): f_1(1) = 1, and h_1(2) = 1 is
    // not strictly above it, so degree 2 is rejected and 3 qualifies via
    // h_1(3) = 0.866 > f_1(2) = 1/2
    FloatSeries g = FloatSeries::zero(500);
    g.at(1) = 1;
    auto f1 = series_exp(g);
    REQUIRE(next_degree(*t, 1, f1) == 3);
}

TEST_CASE("search cap exhausts on an even-support target", "[bestpossible]") {
    auto t = SequenceRule::binary_support({2, 4});
    REQUIRE_THROWS_AS(build_counterexample(*t, 4, 2, 40, 60),
                      std::invalid_argument);  // gcd 2 rejected up front
}

TEST_CASE("counterexample serialization is deterministic", "[bestpossible]") {
    PrecisionGuard guard(256);
    auto t = SequenceRule::power_over_factorial(Rational(1), false);
    auto a = counterexample_to_json(build_counterexample(*t, 1, 3, 60));
    auto b = counterexample_to_json(build_counterexample(*t, 1, 3, 60));
    REQUIRE(a == b);
    REQUIRE(a.contains("stages"));
    auto csv = counterexample_ratio_csv(build_counterexample(*t, 1, 3, 60));
    REQUIRE(csv.find("ratio") != std::string::npos);
}

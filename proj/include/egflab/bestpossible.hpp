#pragma once

// Recursive construction of a series g <= t with gcd-1 support whose exp has
// infinitely many ratio violations f(d)/f(d-1) > 1. Stage coefficients are
// irrational (powers n^(1-1/2d)n / n!), so everything runs on the float
// backend; strict inequalities are only certified outside a tie tolerance.

#include <json.hpp>

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "egflab/numeric.hpp"
#include "egflab/power_series.hpp"
#include "egflab/sequence_rule.hpp"

namespace egf {

struct Stage {
    unsigned m;            // stage index, 1-based
    unsigned degree;       // d_m
    bool has_added_coeff;  // false for the M-prefix stage
    BigFloat added_coeff;  // h_{m-1}(d_m)
    BigFloat ratio_at_d;   // f_m(d_m)/f_m(d_m - 1), stages m >= 2
};

struct CounterexampleResult {
    unsigned M;
    std::vector<Stage> stages;
    FloatSeries g;
    FloatSeries f;
    std::vector<std::pair<unsigned, BigFloat>> violations;  // (d, ratio > 1)
    unsigned precision_bits;
};

// h_d(n) = n^((1 - 1/(2d)) n) / n!
inline BigFloat h_value(unsigned d, unsigned n) {
    if (d < 1 || n < 1) throw std::invalid_argument("h_value: d, n >= 1 required");
    Rational expo = Rational(2 * d - 1, 2 * d);
    BigFloat lgam = lgamma(BigFloat(n + 1));
    return exp(to_bigfloat(expo) * n * log(BigFloat(n)) - lgam);
}

// n in S(theta), i.e. t(n) > n^(theta n)/n!; ties within tol are rejected so
// membership is never certified from rounding.
inline bool s_theta_member(const SequenceRule& t, const Rational& theta, unsigned n,
                           const BigFloat& tol = BigFloat("1e-40")) {
    if (!(theta > 0 && theta < 1))
        throw std::invalid_argument("s_theta_member: theta must lie in (0,1)");
    if (n < 1) throw std::invalid_argument("s_theta_member: n >= 1 required");
    BigFloat tn = t.eval_float(n);
    BigFloat threshold = exp(to_bigfloat(theta) * n * log(BigFloat(n)) -
                             lgamma(BigFloat(n + 1)));
    return tn - threshold > tol;
}

// Smallest d > d_m with d in S(1 - 1/(2 d_m)) and h_{d_m}(d) > f_m(d-1).
inline unsigned next_degree(const SequenceRule& t, unsigned d_m, const FloatSeries& f_m,
                            unsigned search_cap = 500,
                            const BigFloat& tol = BigFloat("1e-40")) {
    if (f_m.order() < search_cap)
        throw std::invalid_argument("next_degree: f_m computed to insufficient order");
    Rational theta = Rational(2 * d_m - 1, 2 * d_m);
    for (unsigned d = d_m + 1; d <= search_cap; ++d) {
        if (!s_theta_member(t, theta, d, tol)) continue;
        if (h_value(d_m, d) - f_m[d - 1] > tol) return d;
    }
    throw search_exhausted("next_degree: no qualifying degree <= " +
                           std::to_string(search_cap));
}

// Runs the staged construction: G_1 is the M-prefix of t; each later stage
// appends h_{d_m}(d_{m+1}) x^{d_{m+1}} for the smallest qualifying degree.
inline CounterexampleResult build_counterexample(const SequenceRule& t, unsigned M,
                                                 unsigned stage_count, unsigned N,
                                                 unsigned search_cap = 500,
                                                 const BigFloat& tol = BigFloat("1e-40")) {
    if (stage_count < 1)
        throw std::invalid_argument("build_counterexample: need at least one stage");

    unsigned gc = 0;
    for (unsigned n = 1; n <= M; ++n)
        if (t.eval_float(n) > 0) gc = std::gcd(gc, n);
    if (gc != 1)
        throw std::invalid_argument(
            "build_counterexample: gcd of t's support up to M must be 1");

    const unsigned order = std::max(N, search_cap);
    FloatSeries g = FloatSeries::zero(order);
    for (unsigned n = 1; n <= M; ++n) g.at(n) = t.eval_float(n);

    CounterexampleResult res{.M = M,
                             .stages = {},
                             .g = g,
                             .f = FloatSeries::zero(order),
                             .violations = {},
                             .precision_bits = current_precision_bits()};

    unsigned d_m = g.degree();
    res.stages.push_back(Stage{1, d_m, false, BigFloat(0), BigFloat(0)});

    FloatSeries f_m = series_exp(g);
    for (unsigned m = 2; m <= stage_count; ++m) {
        unsigned d_next = next_degree(t, d_m, f_m, search_cap, tol);
        BigFloat coeff = h_value(d_m, d_next);
        g.at(d_next) += coeff;
        f_m = series_exp(g);
        BigFloat ratio = f_m[d_next] / f_m[d_next - 1];
        res.stages.push_back(Stage{m, d_next, true, coeff, ratio});
        d_m = d_next;
    }

    res.g = g;
    res.f = f_m;
    for (const auto& st : res.stages) {
        if (!st.has_added_coeff) continue;
        BigFloat global = res.f[st.degree] / res.f[st.degree - 1];
        if (global - 1 > tol) res.violations.emplace_back(st.degree, global);
    }
    return res;
}

inline nlohmann::json counterexample_to_json(const CounterexampleResult& res) {
    nlohmann::json j;
    j["M"] = res.M;
    j["precision_bits"] = res.precision_bits;
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& s : res.stages) {
        nlohmann::json e;
        e["m"] = s.m;
        e["degree"] = s.degree;
        if (s.has_added_coeff) {
            e["added_coeff"] = bigfloat_to_string(s.added_coeff);
            e["ratio_at_d"] = bigfloat_to_string(s.ratio_at_d);
        }
        stages.push_back(e);
    }
    j["stages"] = stages;
    nlohmann::json viol = nlohmann::json::array();
    for (const auto& [d, r] : res.violations)
        viol.push_back({{"d", d}, {"ratio", bigfloat_to_string(r)}});
    j["violations"] = viol;
    return j;
}

inline std::string counterexample_ratio_csv(const CounterexampleResult& res) {
    std::ostringstream out;
    out << "n,f,ratio\n";
    for (unsigned n = 1; n <= res.f.order(); ++n) {
        out << n << ',' << bigfloat_to_string(res.f[n]) << ',';
        if (res.f[n] > 0) out << bigfloat_to_string(res.f[n - 1] / res.f[n]);
        out << '\n';
    }
    return out.str();
}

}  // namespace egf

#pragma once

// Split-and-bound machinery: C_r bounds on n g(n) against f0(n+r), the
// convolution inequality n f1(n) <= C_r f(n+r), the monotone ratio envelope,
// and the end-to-end smoothing demonstration pipeline.

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "egflab/diagnostics.hpp"
#include "egflab/numeric.hpp"
#include "egflab/power_series.hpp"
#include "egflab/sequence_rule.hpp"

namespace egf {

template <typename T>
struct CrBound {
    int r;
    T value;             // sup of n g(n) / f0(n+r) over the window
    unsigned argmax_n;
    unsigned window_lo, window_hi;
};

// C_r = max over the high-part support of n g(n) / f0(n+r), with
// f0 = exp(low part). Only indices n > ell enter the bound: those are the
// coefficients the convolution identity pushes through f0. Since ell > L
// (a certified positivity onset of the low part) and r >= -1, every
// denominator f0(n+r) in the window is positive.
template <typename T>
CrBound<T> cr_bound(const PowerSeries<T>& g, const SplitPair<T>& split, int r,
                    unsigned L) {
    if (r < -1) throw std::invalid_argument("cr_bound: r >= -1 required");
    const unsigned N = g.order();
    PowerSeries<T> f0 = series_exp(split.low);

    CrBound<T> out;
    out.r = r;
    out.value = T(0);
    out.argmax_n = 0;
    (void)L;  // the ell > L precondition makes every f0(n+r) below positive
    out.window_lo = split.ell + 1;
    out.window_hi = static_cast<unsigned>(static_cast<long>(N) - std::max(r, 0));
    for (unsigned n = out.window_lo; n <= out.window_hi; ++n) {
        if (g[n] == 0) continue;
        const T& denom = f0[static_cast<unsigned>(static_cast<long>(n) + r)];
        if (denom == 0)
            throw check_failure("cr_bound: f0 vanishes inside the window; L too small");
        T q = T(n) * g[n] / denom;
        if (q > out.value) {
            out.value = q;
            out.argmax_n = n;
        }
    }
    return out;
}

template <typename T>
struct LemmaCheck {
    bool holds;
    unsigned witness_n = 0;  // first violating index when !holds
    T max_quotient;          // max of n f1(n) / f(n+r) over the window
};

// The convolution inequality n f1(n) <= C_r f(n+r); a violation with the
// C_r computed by cr_bound indicates an implementation defect.
template <typename T>
LemmaCheck<T> lemma31_check(const PowerSeries<T>& g, const SplitPair<T>& split,
                            const CrBound<T>& cr) {
    const unsigned N = g.order();
    PowerSeries<T> f1 = series_exp(split.high);
    PowerSeries<T> f = series_exp(g);

    LemmaCheck<T> out;
    out.holds = true;
    out.max_quotient = T(0);
    for (unsigned n = 1;
         n <= N && static_cast<long>(n) + cr.r <= static_cast<long>(N); ++n) {
        const T& fn = f[static_cast<unsigned>(static_cast<long>(n) + cr.r)];
        T lhs = T(n) * f1[n];
        if (lhs > cr.value * fn) {
            out.holds = false;
            out.witness_n = n;
            throw check_failure("lemma31_check: inequality violated at n=" +
                                std::to_string(n));
        }
        if (fn > 0) {
            T q = lhs / fn;
            if (q > out.max_quotient) out.max_quotient = q;
        }
    }
    return out;
}

// eps(n) = (1 + 1e-6) * max_{m >= n} f0(m)/f0(m-1), monotone nonincreasing
// and pointwise strictly above the ratio sequence.
template <typename T>
std::vector<std::pair<unsigned, T>> epsilon_envelope(const PowerSeries<T>& f0,
                                                     unsigned lo, unsigned hi) {
    if (hi > f0.order() || lo < 1 || hi < lo + 2)
        throw insufficient_data("epsilon_envelope: window must hold at least 3 points");
    for (unsigned m = lo - 1; m <= hi; ++m)
        if (!(f0[m] > 0))
            throw std::invalid_argument("epsilon_envelope: f0 must be positive on window");

    const T strict = [] {
        if constexpr (PowerSeries<T>::exact) return Rational(1000001, 1000000);
        else return BigFloat(1) + BigFloat("1e-6");
    }();

    std::vector<std::pair<unsigned, T>> out(hi - lo + 1);
    T suffix_max(0);
    for (unsigned m = hi; m >= lo; --m) {
        T q = f0[m] / f0[m - 1];
        if (q > suffix_max) suffix_max = q;
        out[m - lo] = {m, suffix_max * strict};
    }
    if (out.back().second >= 1)
        throw check_failure("epsilon_envelope: envelope does not drop below 1 on window");
    return out;
}

struct TheoremDemoReport {
    Rational theta;
    BigFloat hypothesis_constant;  // max of g(n) n! / n^(theta n) on the window
    long L;
    unsigned ell;
    std::vector<CrBound<Rational>> cr_table;
    std::vector<Rational> lemma_max_quotients;  // parallel to cr_table
    RatioReport ratios;
    std::vector<std::pair<unsigned, Rational>> epsilon_table;
    RationalSeries f;
};

// End-to-end demonstration: given g(n) <= n^(theta n)/n! with gcd-1 support,
// split at the smallest admissible ell, tabulate C_r for small shifts, verify
// the convolution inequality, and report the ratio evidence for f = exp(g).
inline TheoremDemoReport theorem_demo(const SequenceRule& g_rule, const Rational& theta,
                                      unsigned N, TrendConfig trend_cfg = {}) {
    if (!(theta > 0 && theta < 1))
        throw std::invalid_argument("theorem_demo: theta must lie in (0,1)");
    if (!g_rule.is_exact())
        throw domain_mismatch("theorem_demo: rule must be exact");

    RationalSeries g = RationalSeries::from_rule(g_rule, N);

    auto prof = support_gcd(g, N);
    if (prof.gcd != 1)
        throw std::invalid_argument("theorem_demo: gcd of support must be 1, got " +
                                    std::to_string(prof.gcd));

    // Hypothesis g(n) n! <= n^(theta n), checked exactly by cross powers:
    // (a/b)^q <= n^(p n) with theta = p/q.
    BigFloat c_est(0);
    const Int p = numerator(theta), q = denominator(theta);
    for (unsigned n = 1; n <= N; ++n) {
        Rational lhs = g.coeffs()[n] * factorial(n);
        if (lhs == 0) continue;
        Int lq = pow(Int(numerator(lhs)), q.convert_to<unsigned>());
        Int rq = pow(Int(denominator(lhs)), q.convert_to<unsigned>()) *
                 pow(Int(n), (p * n).convert_to<unsigned>());
        if (lq > rq)
            throw check_failure("theorem_demo: hypothesis g(n) <= n^(theta n)/n! fails at n=" +
                                std::to_string(n));
        BigFloat c = to_bigfloat(lhs) / float_power(n, theta);
        if (c > c_est) c_est = c;
    }

    TheoremDemoReport rep{.theta = theta,
                          .hypothesis_constant = c_est,
                          .L = smallest_certified_onset(g),
                          .ell = 0,
                          .cr_table = {},
                          .lemma_max_quotients = {},
                          .ratios = {},
                          .epsilon_table = {},
                          .f = RationalSeries::zero(0)};
    if (rep.L < 0)
        throw check_failure("theorem_demo: no certified positivity onset within cap");

    // smallest ell with ell > L, 1/ell < 1 - theta, g(ell) > 0
    Rational inv_gap = Rational(1) / (Rational(1) - theta);
    unsigned ell_min =
        (Int(numerator(inv_gap)) / Int(denominator(inv_gap))).convert_to<unsigned>() + 1;
    for (unsigned ell = std::max<unsigned>(static_cast<unsigned>(rep.L) + 1, ell_min);
         ell <= N; ++ell) {
        if (g[ell] > 0) { rep.ell = ell; break; }
    }
    if (rep.ell == 0)
        throw search_exhausted("theorem_demo: no admissible split degree up to N");

    SplitPair<Rational> split = split_at(g, rep.ell);
    for (int r : {-1, 0, 1, 2}) {
        auto cb = cr_bound(g, split, r, static_cast<unsigned>(rep.L));
        auto chk = lemma31_check(g, split, cb);
        rep.cr_table.push_back(std::move(cb));
        rep.lemma_max_quotients.push_back(chk.max_quotient);
    }

    rep.f = series_exp(g);
    rep.ratios = ratio_sequence(rep.f, 2, trend_cfg);

    PowerSeries<Rational> f0 = series_exp(split.low);
    rep.epsilon_table = epsilon_envelope(f0, static_cast<unsigned>(rep.L) + 2, N);
    return rep;
}

inline nlohmann::json theorem_demo_to_json(const TheoremDemoReport& rep) {
    nlohmann::json j;
    j["theta"] = rational_to_string(rep.theta);
    j["hypothesis_constant"] = bigfloat_to_string(rep.hypothesis_constant);
    j["L"] = rep.L;
    j["ell"] = rep.ell;
    nlohmann::json crs = nlohmann::json::array();
    for (size_t i = 0; i < rep.cr_table.size(); ++i) {
        const auto& cb = rep.cr_table[i];
        nlohmann::json e;
        e["r"] = cb.r;
        e["C_r"] = rational_to_string(cb.value);
        e["argmax_n"] = cb.argmax_n;
        e["window"] = {cb.window_lo, cb.window_hi};
        e["lemma_max_quotient"] = rational_to_string(rep.lemma_max_quotients[i]);
        crs.push_back(e);
    }
    j["cr_table"] = crs;
    j["ratios"] = ratio_report_to_json(rep.ratios);
    nlohmann::json eps = nlohmann::json::array();
    for (const auto& [n, v] : rep.epsilon_table)
        eps.push_back({{"n", n}, {"eps", rational_to_string(v)}});
    j["epsilon_table"] = eps;
    return j;
}

inline std::string theorem_demo_to_csv(const TheoremDemoReport& rep) {
    std::ostringstream out;
    out << "n,f,ratio,eps\n";
    unsigned eps_lo = rep.epsilon_table.empty() ? 0 : rep.epsilon_table.front().first;
    for (const auto& pt : rep.ratios.points) {
        out << pt.n << ',' << pt.f_exact << ','
            << (pt.defined ? bigfloat_to_string(pt.ratio) : std::string()) << ',';
        if (!rep.epsilon_table.empty() && pt.n >= eps_lo &&
            pt.n - eps_lo < rep.epsilon_table.size())
            out << rational_to_string(rep.epsilon_table[pt.n - eps_lo].second);
        out << '\n';
    }
    return out.str();
}

}  // namespace egf

#pragma once

// Adequate classes of finite structures: component-count rules to total
// counts via the two fundamental equations, and the numeric 0-1 law criteria
// (labelled theta-bound; unlabelled Bell / Bateman-Erdos / Schur / radius).

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "egflab/diagnostics.hpp"
#include "egflab/numeric.hpp"
#include "egflab/power_series.hpp"
#include "egflab/sequence_rule.hpp"

namespace egf {

struct ClassSpec {
    std::string name;
    RulePtr p_labelled;    // labelled connected counts p_L(n)
    RulePtr p_unlabelled;  // unlabelled connected counts p_U(n); may be null
                           // (colored wrappers leave the unlabelled side undefined)
};

// Built-in classes. finitely-many-components takes its explicit list
// through make_finitely_generated below.
inline ClassSpec builtin_class(const std::string& name) {
    auto one = SequenceRule::constant_one();
    if (name == "unary-predicates") {
        auto ind1 = SequenceRule::binary_support({1});
        return {name, ind1, ind1};
    }
    if (name == "height1-forests")
        return {name, SequenceRule::polynomial({Rational(0), Rational(1)}), one};
    if (name == "equivalence-relations") return {name, one, one};
    if (name == "selection-partitions") {
        // p_L(n) = 2^n - 1; p_U(n) = n (one type per nonempty subset size)
        auto p_l = SequenceRule::sum(SequenceRule::geometric(Rational(1), Rational(2)),
                                     SequenceRule::polynomial({Rational(-1)}));
        return {name, p_l, SequenceRule::polynomial({Rational(0), Rational(1)})};
    }
    if (name == "broom")
        return {name, SequenceRule::named_builtin("broom-labelled"),
                SequenceRule::named_builtin("broom-unlabelled")};
    throw std::invalid_argument("unknown builtin class: " + name);
}

inline ClassSpec make_finitely_generated(std::vector<Rational> p_values) {
    auto rule = SequenceRule::explicit_list(std::move(p_values));
    return {"finitely-many-components", rule, rule};
}

// Labelled coloring: each of the n distinguishable elements picks one of r
// colors, so p_L'(n) = p_L(n) r^n. The unlabelled side is left undefined.
inline ClassSpec color_wrapper(const ClassSpec& spec, unsigned colors) {
    if (colors < 1) throw std::invalid_argument("color_wrapper: need at least one color");
    if (colors == 1) return spec;
    return {spec.name + "-colored-" + std::to_string(colors),
            SequenceRule::colored(spec.p_labelled, colors), nullptr};
}

struct LabelledTotals {
    RationalSeries egf;       // coefficients a_L(n)/n!
    std::vector<Int> counts;  // a_L(n)
};

// A_L = exp(P_L); a_L(n) = n! [x^n] A_L must come out a nonnegative integer.
inline LabelledTotals labelled_totals(const ClassSpec& spec, unsigned N) {
    std::vector<Rational> p(N + 1, Rational(0));
    for (unsigned n = 1; n <= N; ++n) {
        Rational v = spec.p_labelled->eval_exact(n);
        if (v < 0 || denominator(v) != 1)
            throw std::invalid_argument("labelled_totals: p_L must be nonnegative integers");
        p[n] = v / factorial(n);
    }
    RationalSeries a = series_exp(RationalSeries(N, std::move(p)));
    LabelledTotals out{a, {}};
    for (unsigned n = 0; n <= N; ++n) {
        Rational c = a[n] * factorial(n);
        if (denominator(c) != 1 || c < 0)
            throw numeric_failure("labelled_totals: a_L(" + std::to_string(n) +
                                  ") is not a nonnegative integer");
        out.counts.push_back(Int(numerator(c)));
    }
    return out;
}

// A_U = prod (1-x^j)^{-p_U(j)} via the Euler product.
inline RationalSeries unlabelled_totals(const ClassSpec& spec, unsigned N) {
    if (!spec.p_unlabelled)
        throw std::invalid_argument("unlabelled_totals: class has no unlabelled side");
    return euler_product(*spec.p_unlabelled, N);
}

struct RadiusEstimate {
    BigFloat estimate;   // 1 / (max of a(n)^{1/n} over the tail window)
    BigFloat band;       // spread between the two halves of the tail
    unsigned window_lo, window_hi;
};

// Root-test radius: reciprocal of the tail maximum of a(n)^{1/n}.
inline RadiusEstimate radius_estimate(const std::vector<BigFloat>& a, unsigned N) {
    if (a.size() < N + 1) throw std::invalid_argument("radius_estimate: short sequence");
    unsigned lo = N / 2;
    auto tail_max = [&](unsigned from, unsigned to) {
        BigFloat best(0);
        for (unsigned n = std::max(from, 1u); n <= to; ++n) {
            if (!(a[n] > 0)) continue;
            BigFloat root = exp(log(a[n]) / n);
            if (root > best) best = root;
        }
        return best;
    };
    BigFloat full = tail_max(lo, N);
    if (full == 0) throw insufficient_data("radius_estimate: all-zero tail");
    BigFloat first = tail_max(lo, lo + (N - lo) / 2);
    BigFloat second = tail_max(lo + (N - lo) / 2 + 1, N);
    RadiusEstimate out;
    out.estimate = 1 / full;
    out.band = (first > 0 && second > 0) ? abs(1 / first - 1 / second) : BigFloat(0);
    out.window_lo = lo;
    out.window_hi = N;
    return out;
}

inline RadiusEstimate radius_estimate(const SequenceRule& rule, unsigned N) {
    std::vector<BigFloat> a(N + 1);
    for (unsigned n = 0; n <= N; ++n) a[n] = rule.eval_float(n);
    return radius_estimate(a, N);
}

inline RadiusEstimate radius_estimate(const RationalSeries& s) {
    std::vector<BigFloat> a(s.order() + 1);
    for (unsigned n = 0; n <= s.order(); ++n) a[n] = to_bigfloat(s[n]);
    return radius_estimate(a, s.order());
}

struct SchurFit {
    unsigned r;             // total number of connected structures
    BigFloat C;             // fitted constant in a_U(n) ~ C n^{r-1}
    BigFloat drift_first;   // |a_U(n)/n^{r-1} - C| averaged over early window
    BigFloat drift_last;    // same over late window
};

// Polynomial asymptotics for finitely generated classes with gcd-1 support.
inline SchurFit schur_fit(const ClassSpec& spec, unsigned N) {
    if (!spec.p_unlabelled)
        throw std::invalid_argument("schur_fit: class has no unlabelled side");
    auto bound = spec.p_unlabelled->finite_support_bound();
    if (!bound) throw std::invalid_argument("schur_fit: p_U must have finite support");
    auto prof = support_gcd(*spec.p_unlabelled, *bound + 1);
    if (prof.gcd != 1)
        throw std::invalid_argument("schur_fit: gcd of p_U support must be 1, got " +
                                    std::to_string(prof.gcd));
    Rational r_total = 0;
    for (unsigned n = 1; n <= *bound; ++n) r_total += spec.p_unlabelled->eval_exact(n);
    unsigned r = numerator(r_total).convert_to<unsigned>();

    RationalSeries a = unlabelled_totals(spec, N);
    auto scaled = [&](unsigned n) -> BigFloat {
        return to_bigfloat(a[n]) / pow(BigFloat(n), static_cast<int>(r) - 1);
    };
    SchurFit fit;
    fit.r = r;
    fit.C = scaled(N);
    auto drift = [&](unsigned from, unsigned to) -> BigFloat {
        BigFloat acc(0);
        for (unsigned n = from; n <= to; ++n) acc += abs(scaled(n) - fit.C);
        return acc / (to - from + 1);
    };
    fit.drift_first = drift(std::max(2u, N / 4), N / 2);
    fit.drift_last = drift(N / 2 + 1, N);
    return fit;
}

enum class Verdict { HoldsByCriterion, FailsByCriterion, Inconclusive };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HoldsByCriterion: return "holds-by-criterion";
        case Verdict::FailsByCriterion: return "fails-by-criterion";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct LawVerdict {
    std::string side;
    std::string criterion;
    Verdict verdict = Verdict::Inconclusive;
    nlohmann::json evidence;
};

struct LawConfig {
    double theta_max = 0.95;        // on-window bound for the labelled hypothesis
    double radius_away_from_1 = 0.98;  // "bounded away from 1": estimate + band below this
    double poly_slope_margin = 0.5;    // growth allowance for log p_U(n)/log n
    unsigned radius_window = 600;
    TrendConfig trend = {};
};

// Labelled criterion: p_L(n) = O(n^(theta n)) with theta < 1 (checked on the
// window via theta-hat), plus diverging ratio evidence for a_L(n)/n! and the
// shift test for the smallest k with p_L(k) > 0.
inline LawVerdict labelled_01_verdict(const ClassSpec& spec, unsigned N,
                                      LawConfig cfg = {}) {
    LawVerdict out;
    out.side = "labelled";
    out.criterion = "theorem-theta-bound";

    BigFloat theta_hat(0);
    for (unsigned n = 2; n <= N; ++n) {
        Rational p = spec.p_labelled->eval_exact(n);
        if (p <= 1) continue;
        BigFloat t = log(to_bigfloat(p)) / (BigFloat(n) * log(BigFloat(n)));
        if (t > theta_hat) theta_hat = t;
    }
    out.evidence["theta_hat"] = bigfloat_to_string(theta_hat);
    out.evidence["theta_max"] = cfg.theta_max;

    if (theta_hat > cfg.theta_max) {
        out.verdict = Verdict::Inconclusive;  // sufficient criterion; no claim
        out.evidence["note"] = "on-window exponent exceeds theta_max";
        return out;
    }

    LabelledTotals totals = labelled_totals(spec, N);
    RatioReport ratios = ratio_sequence(totals.egf, 2, cfg.trend);
    out.evidence["ratio_trend"] = trend_name(ratios.trend);

    // shift test: (a_L(n-k)/(n-k)!) / (a_L(n)/n!) should diverge for the
    // three smallest k with p_L(k) > 0
    std::vector<unsigned> ks;
    for (unsigned k = 1; k <= N && ks.size() < 3; ++k)
        if (spec.p_labelled->eval_exact(k) > 0) ks.push_back(k);
    bool shifts_ok = !ks.empty();
    nlohmann::json shift_ev = nlohmann::json::array();
    for (unsigned k : ks) {
        // reuse the trend machinery on sigma(n) = f(n-k)/f(n)
        RatioReport rep;
        rep.config = cfg.trend;
        for (unsigned n = k + 1; n <= N; ++n) {
            RatioPoint p;
            p.n = n;
            p.defined = totals.egf[n] > 0;
            if (p.defined)
                p.ratio = to_bigfloat(totals.egf[n - k] / totals.egf[n]);
            p.f_exact = rational_to_string(totals.egf[n]);
            rep.points.push_back(std::move(p));
        }
        Trend t = classify_trend(rep, cfg.trend);
        shift_ev.push_back({{"k", k}, {"trend", trend_name(t)}});
        if (t != Trend::Diverging) shifts_ok = false;
    }
    out.evidence["shift_tests"] = shift_ev;

    out.verdict = (ratios.trend == Trend::Diverging && shifts_ok)
                      ? Verdict::HoldsByCriterion
                      : Verdict::Inconclusive;
    return out;
}

// Unlabelled criteria, applied in order: polynomial boundedness (Bell),
// {0,1}-valued counts (Bateman-Erdos), finite support (Schur), and finally
// the radius disproof when the estimate is bounded away from 1.
inline LawVerdict unlabelled_01_verdict(const ClassSpec& spec, unsigned N,
                                        LawConfig cfg = {}) {
    if (!spec.p_unlabelled)
        throw std::invalid_argument("unlabelled_01_verdict: no unlabelled side");
    LawVerdict out;
    out.side = "unlabelled";

    RationalSeries a = unlabelled_totals(spec, N);
    RatioReport ratios = ratio_sequence(a, 2, cfg.trend);
    out.evidence["a_U_ratio_trend"] = trend_name(ratios.trend);

    // (i) polynomially bounded p_U: compare log p_U(n)/log n across halves
    BigFloat slope_first(0), slope_last(0);
    bool all_01 = true;
    for (unsigned n = 2; n <= N; ++n) {
        Rational p = spec.p_unlabelled->eval_exact(n);
        if (p > 1) all_01 = false;
        if (p <= 1) continue;
        BigFloat e = log(to_bigfloat(p)) / log(BigFloat(n));
        BigFloat& slot = n <= N / 2 ? slope_first : slope_last;
        if (e > slot) slot = e;
    }
    out.evidence["poly_slope_first_half"] = bigfloat_to_string(slope_first);
    out.evidence["poly_slope_second_half"] = bigfloat_to_string(slope_last);
    if (slope_last <= slope_first + BigFloat(cfg.poly_slope_margin)) {
        out.criterion = "bell-poly-bounded";
        out.verdict = Verdict::HoldsByCriterion;
        return out;
    }

    // (ii) Bateman-Erdos: p_U in {0,1}
    if (all_01) {
        out.criterion = "bateman-erdos";
        out.verdict = Verdict::HoldsByCriterion;
        return out;
    }

    // (iii) finite support: Schur asymptotics
    if (spec.p_unlabelled->finite_support_bound()) {
        SchurFit fit = schur_fit(spec, N);
        out.criterion = "schur-finitely-generated";
        out.evidence["schur_r"] = fit.r;
        out.evidence["schur_C"] = bigfloat_to_string(fit.C);
        out.verdict = Verdict::HoldsByCriterion;
        return out;
    }

    // (iv) radius of the component series bounded away from 1 disproves
    RadiusEstimate rad = radius_estimate(*spec.p_unlabelled, cfg.radius_window);
    out.evidence["radius_estimate"] = bigfloat_to_string(rad.estimate);
    out.evidence["radius_band"] = bigfloat_to_string(rad.band);
    if (rad.estimate + rad.band < BigFloat(cfg.radius_away_from_1) &&
        rad.estimate - rad.band > BigFloat(0.02)) {
        out.criterion = "radius-in-(0,1)";
        out.verdict = Verdict::FailsByCriterion;
        return out;
    }

    out.criterion = "radius-in-(0,1)";
    out.verdict = Verdict::Inconclusive;
    return out;
}

inline nlohmann::json verdict_to_json(const LawVerdict& v) {
    nlohmann::json j;
    j["side"] = v.side;
    j["criterion"] = v.criterion;
    j["verdict"] = verdict_name(v.verdict);
    j["evidence"] = v.evidence;
    return j;
}

}  // namespace egf

#pragma once

// Ratio-test evidence and support analysis. The RT_inf / RT_1 statements of
// interest are limits; everything here reports finite-window evidence with
// explicit thresholds, never a proof.

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "egflab/numeric.hpp"
#include "egflab/power_series.hpp"

namespace egf {

enum class Trend { Diverging, TendingToOne, TendingToZero, NonMonotone, Inconclusive };

inline std::string trend_name(Trend t) {
    switch (t) {
        case Trend::Diverging: return "diverging";
        case Trend::TendingToOne: return "tending-to-one";
        case Trend::TendingToZero: return "tending-to-zero";
        case Trend::NonMonotone: return "non-monotone";
        case Trend::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct TrendConfig {
    double kappa = 5.0;    // diverging: final ratio >= kappa * initial ratio
    double delta = 0.05;   // tending-to-one: final |ratio - 1| < delta
    unsigned min_points = 10;
};

struct RatioPoint {
    unsigned n;
    bool defined;          // false where f(n) = 0
    BigFloat ratio;        // f(n-1)/f(n) when defined
    std::string f_exact;   // printable f(n)
};

struct RatioReport {
    std::vector<RatioPoint> points;
    Trend trend = Trend::Inconclusive;
    TrendConfig config;
    unsigned monotone_violations = 0;

    std::vector<const RatioPoint*> defined_points() const {
        std::vector<const RatioPoint*> out;
        for (const auto& p : points)
            if (p.defined) out.push_back(&p);
        return out;
    }
};

// Finite-window heuristic labeling; deterministic given (ratios, config).
inline Trend classify_trend(RatioReport& report, const TrendConfig& cfg) {
    auto pts = report.defined_points();
    if (pts.size() < cfg.min_points)
        throw insufficient_data("classify_trend: need at least " +
                                std::to_string(cfg.min_points) + " defined ratio points");
    const size_t m = pts.size();

    unsigned flips = 0;
    int last_sign = 0;
    for (size_t i = 1; i < m; ++i) {
        BigFloat d = pts[i]->ratio - pts[i - 1]->ratio;
        int sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (sign != 0) {
            if (last_sign != 0 && sign != last_sign && i >= m / 4) ++flips;
            last_sign = sign;
        }
    }
    report.monotone_violations = flips;

    bool increasing_tail = true;
    for (size_t i = m / 2 + 1; i < m; ++i)
        if (!(pts[i]->ratio > pts[i - 1]->ratio)) { increasing_tail = false; break; }
    if (increasing_tail && pts.back()->ratio >= BigFloat(cfg.kappa) * pts.front()->ratio)
        return Trend::Diverging;

    bool gap_shrinking = true;
    for (size_t i = m / 2 + 1; i < m; ++i)
        if (abs(pts[i]->ratio - 1) > abs(pts[i - 1]->ratio - 1)) { gap_shrinking = false; break; }
    if (gap_shrinking && abs(pts.back()->ratio - 1) < cfg.delta)
        return Trend::TendingToOne;

    bool decreasing = true;
    for (size_t i = 1; i < m; ++i)
        if (pts[i]->ratio > pts[i - 1]->ratio) { decreasing = false; break; }
    if (decreasing && pts.back()->ratio < cfg.delta) return Trend::TendingToZero;

    if (flips > 0) return Trend::NonMonotone;
    return Trend::Inconclusive;
}

// rho(n) = f(n-1)/f(n) over [n0, N]; undefined entries are first-class.
template <typename T>
RatioReport ratio_sequence(const PowerSeries<T>& f, unsigned n0,
                           TrendConfig cfg = {}) {
    if (n0 < 1) throw std::invalid_argument("ratio_sequence: n0 >= 1 required");
    RatioReport report;
    report.config = cfg;
    bool any_nonzero = false;
    for (unsigned n = n0; n <= f.order(); ++n) {
        RatioPoint p;
        p.n = n;
        if constexpr (PowerSeries<T>::exact) {
            p.f_exact = rational_to_string(f[n]);
            p.defined = f[n] > 0;
            if (p.defined) p.ratio = to_bigfloat(f[n - 1] / f[n]);
        } else {
            p.f_exact = bigfloat_to_string(f[n]);
            p.defined = f[n] > 0;
            if (p.defined) p.ratio = f[n - 1] / f[n];
        }
        if (f[n] != 0) any_nonzero = true;
        report.points.push_back(std::move(p));
    }
    if (!any_nonzero)
        throw insufficient_data("ratio_sequence: series is zero on the window");
    try {
        report.trend = classify_trend(report, cfg);
    } catch (const insufficient_data&) {
        report.trend = Trend::Inconclusive;
    }
    return report;
}

inline nlohmann::json ratio_report_to_json(const RatioReport& r) {
    nlohmann::json j;
    j["trend"] = trend_name(r.trend);
    j["kappa"] = r.config.kappa;
    j["delta"] = r.config.delta;
    j["monotone_violations"] = r.monotone_violations;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : r.points) {
        nlohmann::json e;
        e["n"] = p.n;
        e["defined"] = p.defined;
        e["f"] = p.f_exact;
        if (p.defined) e["ratio"] = bigfloat_to_string(p.ratio);
        pts.push_back(e);
    }
    j["points"] = pts;
    return j;
}

inline std::string ratio_report_to_csv(const RatioReport& r) {
    std::ostringstream out;
    out << "n,f,ratio,defined\n";
    for (const auto& p : r.points)
        out << p.n << ',' << p.f_exact << ','
            << (p.defined ? bigfloat_to_string(p.ratio) : std::string()) << ','
            << (p.defined ? 1 : 0) << '\n';
    return out.str();
}

// --- support / numerical-semigroup analysis ---

struct SupportProfile {
    std::set<unsigned> support;
    unsigned gcd = 0;
    std::optional<long> frobenius_bound;  // nullopt: not applicable (gcd > 1)
    long onset_L = -1;
};

// Largest integer not representable as a nonnegative integer combination of
// a gcd-1 set, by dynamic programming over representable integers.
inline long frobenius_number(const std::set<unsigned>& support) {
    unsigned lo = *support.begin(), hi = *support.rbegin();
    // Frobenius number of a gcd-1 set is below lo*hi.
    const size_t bound = static_cast<size_t>(lo) * hi + hi + 1;
    std::vector<char> reach(bound + 1, 0);
    reach[0] = 1;
    for (size_t v = 1; v <= bound; ++v)
        for (unsigned s : support)
            if (v >= s && reach[v - s]) { reach[v] = 1; break; }
    for (size_t v = bound + 1; v-- > 1;)
        if (!reach[v]) return static_cast<long>(v);
    return -1;  // everything representable (1 is in the support)
}

template <typename T>
std::set<unsigned> positive_support(const PowerSeries<T>& g, unsigned window) {
    std::set<unsigned> s;
    for (unsigned n = 1; n <= std::min(window, g.order()); ++n)
        if (g[n] > 0) s.insert(n);
    return s;
}

inline std::set<unsigned> positive_support(const SequenceRule& rule, unsigned window) {
    std::set<unsigned> s;
    for (unsigned n = 1; n <= window; ++n)
        if (rule.eval_exact(n) > 0) s.insert(n);
    return s;
}

inline SupportProfile support_profile(std::set<unsigned> support) {
    if (support.empty())
        throw insufficient_data("support_gcd: empty support");
    SupportProfile prof;
    prof.support = std::move(support);
    unsigned g = 0;
    for (unsigned s : prof.support) g = std::gcd(g, s);
    prof.gcd = g;
    if (g == 1) {
        prof.frobenius_bound = frobenius_number(prof.support);
        prof.onset_L = std::max<long>(2, *prof.frobenius_bound);
    }
    return prof;
}

template <typename S>
SupportProfile support_gcd(const S& g, unsigned window) {
    if (window < 1) throw std::invalid_argument("support_gcd: window >= 1 required");
    return support_profile(positive_support(g, window));
}

enum class OnsetVerdict { Certified, WindowOnly, Fails };

struct OnsetResult {
    OnsetVerdict verdict;
    long frobenius = -1;
    unsigned gcd = 0;
    std::string witness;
};

// Checks the onset condition: n > L implies [x^n] exp(g(1)x+...+g(L)x^L) > 0.
// With gcd 1, the Frobenius bound of the low support decides this for all n;
// the computed window is cross-checked as well.
template <typename T>
OnsetResult positivity_onset(const PowerSeries<T>& g, unsigned L) {
    if (L < 2) throw std::invalid_argument("positivity_onset: L >= 2 required");
    std::set<unsigned> low_support;
    for (unsigned n = 1; n <= std::min(L, g.order()); ++n)
        if (g[n] > 0) low_support.insert(n);
    OnsetResult res;
    if (low_support.empty()) {
        res.verdict = OnsetVerdict::Fails;
        res.witness = "no positive coefficients at degrees <= L";
        return res;
    }
    unsigned gc = 0;
    for (unsigned s : low_support) gc = std::gcd(gc, s);
    res.gcd = gc;
    if (gc != 1) {
        res.verdict = OnsetVerdict::Fails;
        res.witness = "gcd of low-degree support is " + std::to_string(gc);
        return res;
    }
    res.frobenius = frobenius_number(low_support);

    // cross-check on the computed window: f0(n) > 0 exactly when n is a
    // nonnegative integer combination of the low support
    PowerSeries<T> low = PowerSeries<T>::zero(g.order());
    for (unsigned n : low_support) low.at(n) = g[n];
    PowerSeries<T> f0 = series_exp(low);
    std::vector<char> reach(g.order() + 1, 0);
    reach[0] = 1;
    for (unsigned n = 1; n <= g.order(); ++n)
        for (unsigned s : low_support)
            if (n >= s && reach[n - s]) { reach[n] = 1; break; }
    for (unsigned n = L + 1; n <= g.order(); ++n) {
        bool positive = f0[n] > 0;
        if (positive != static_cast<bool>(reach[n]))
            throw check_failure("positivity_onset: window disagrees with Frobenius bound");
    }

    if (res.frobenius <= static_cast<long>(L)) {
        res.verdict = PowerSeries<T>::exact ? OnsetVerdict::Certified
                                            : OnsetVerdict::WindowOnly;
    } else {
        res.verdict = OnsetVerdict::Fails;
        res.witness = "coefficient vanishes at n=" + std::to_string(res.frobenius) +
                      " > L";
    }
    return res;
}

// Smallest L >= 2 whose onset condition is certified, or -1 within the cap.
template <typename T>
long smallest_certified_onset(const PowerSeries<T>& g, unsigned cap = 64) {
    for (unsigned L = 2; L <= std::min(cap, g.order()); ++L) {
        try {
            auto res = positivity_onset(g, L);
            if (res.verdict != OnsetVerdict::Fails) return L;
        } catch (const check_failure&) { throw; }
    }
    return -1;
}

}  // namespace egf

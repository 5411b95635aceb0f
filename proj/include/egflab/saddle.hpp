#pragma once

// Saddle-point asymptotics for F = exp(G) with G a nonnegative polynomial:
// the root of x G'(x) = n, the coefficient estimate
// F(r_n) / (r_n^n sqrt(2 pi B(r_n))), and the exponent-law fit.

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "egflab/numeric.hpp"
#include "egflab/power_series.hpp"

namespace egf {

struct SaddleReport {
    unsigned n;
    BigFloat r_n;
    BigFloat B_rn;
    BigFloat G_rn;
    BigFloat estimate;
    Rational exact;
    BigFloat rel_err;
};

namespace detail {

inline void require_saddle_poly(const RationalSeries& G) {
    if (G[0] != 0)
        throw std::invalid_argument("saddle: G(0) must be zero");
    if (!G.nonnegative())
        throw std::invalid_argument("saddle: G must have nonnegative coefficients");
    if (G.degree() == 0)
        throw std::invalid_argument("saddle: G must be a nonzero polynomial");
}

// x G'(x) = sum j g(j) x^j, evaluated at x by Horner.
inline BigFloat xgprime(const RationalSeries& G, const BigFloat& x) {
    BigFloat acc(0);
    for (unsigned j = G.degree(); j >= 1; --j)
        acc = acc * x + BigFloat(j) * to_bigfloat(G[j]);
    return acc * x;
}

inline BigFloat xgprime_deriv(const RationalSeries& G, const BigFloat& x) {
    // d/dx [sum j g(j) x^j] = sum j^2 g(j) x^{j-1}
    BigFloat acc(0);
    for (unsigned j = G.degree(); j >= 1; --j)
        acc = acc * x + BigFloat(j) * BigFloat(j) * to_bigfloat(G[j]);
    return acc;
}

}  // namespace detail

// Unique positive root of x G'(x) = n: bracketed bisection, Newton polish.
// The upper bracket 2 (n/(d g(d)))^(1/d) encloses the root for nonnegative G.
inline BigFloat solve_saddle(const RationalSeries& G, unsigned n,
                             const BigFloat& tol = BigFloat("1e-30"),
                             unsigned max_iter = 10000) {
    detail::require_saddle_poly(G);
    if (n < 1) throw std::invalid_argument("solve_saddle: n >= 1 required");

    const unsigned d = G.degree();
    BigFloat target(n);
    BigFloat hi = 2 * pow(target / (BigFloat(d) * to_bigfloat(G[d])), BigFloat(1) / d);
    if (hi < 1) hi = 1;
    unsigned iter = 0;
    while (detail::xgprime(G, hi) < target) {
        hi *= 2;
        if (++iter > max_iter) throw numeric_failure("solve_saddle: bracket search failed");
    }
    BigFloat lo(0);
    for (iter = 0; iter < max_iter && hi - lo > tol; ++iter) {
        BigFloat mid = (lo + hi) / 2;
        (detail::xgprime(G, mid) < target ? lo : hi) = mid;
    }
    BigFloat x = (lo + hi) / 2;
    for (unsigned k = 0; k < 8; ++k) {
        BigFloat resid = detail::xgprime(G, x) - target;
        if (abs(resid) <= tol) break;
        BigFloat deriv = detail::xgprime_deriv(G, x);
        x -= resid / deriv;
    }
    if (abs(detail::xgprime(G, x) - target) > tol)
        throw numeric_failure("solve_saddle: residual above tolerance, bracket [" +
                              bigfloat_to_string(lo) + ", " + bigfloat_to_string(hi) + "]");
    return x;
}

// Full per-n record: root, B, estimate, exact coefficient, relative error.
inline SaddleReport hayman_estimate(const RationalSeries& G, unsigned n,
                                    const BigFloat& tol = BigFloat("1e-30")) {
    SaddleReport rep;
    rep.n = n;
    rep.r_n = solve_saddle(G, n, tol);

    BigFloat G_r(0), B_r(0);
    for (unsigned j = G.degree(); j >= 1; --j) {
        G_r = G_r * rep.r_n + to_bigfloat(G[j]);
        B_r = B_r * rep.r_n + BigFloat(j) * BigFloat(j) * to_bigfloat(G[j]);
    }
    G_r *= rep.r_n;  // sum g(j) x^j
    B_r *= rep.r_n;  // B(x) = x^2 G'' + x G' = sum j^2 g(j) x^j
    rep.G_rn = G_r;
    rep.B_rn = B_r;

    const BigFloat two_pi = 8 * atan(BigFloat(1));
    rep.estimate = exp(G_r - BigFloat(n) * log(rep.r_n)) / sqrt(two_pi * B_r);

    RationalSeries Gn = [&] {
        std::vector<Rational> c(n + 1, Rational(0));
        for (unsigned j = 1; j <= std::min(n, G.order()); ++j) c[j] = G[j];
        return RationalSeries(n, std::move(c));
    }();
    rep.exact = series_exp(Gn)[n];
    if (rep.exact > 0)
        rep.rel_err = abs(rep.estimate - to_bigfloat(rep.exact)) / to_bigfloat(rep.exact);
    else
        rep.rel_err = BigFloat(-1);
    return rep;
}

struct ExponentFit {
    unsigned degree;
    std::vector<std::pair<unsigned, BigFloat>> s;  // (n, -d log f(n)/(n log n))
    BigFloat drift_first;
    BigFloat drift_last;
};

// Convergence evidence for f(n) = exp(-(n log n)/d (1+o(1))).
inline ExponentFit exponent_fit(const RationalSeries& G,
                                const std::vector<unsigned>& sample) {
    detail::require_saddle_poly(G);
    if (sample.empty()) throw std::invalid_argument("exponent_fit: empty sample");
    unsigned maxn = *std::max_element(sample.begin(), sample.end());

    std::vector<Rational> c(maxn + 1, Rational(0));
    for (unsigned j = 1; j <= std::min(maxn, G.order()); ++j) c[j] = G[j];
    RationalSeries f = series_exp(RationalSeries(maxn, std::move(c)));

    ExponentFit fit;
    fit.degree = G.degree();
    for (unsigned n : sample) {
        if (n < 2) throw std::invalid_argument("exponent_fit: sample indices must be >= 2");
        if (f[n] == 0)
            throw numeric_failure("exponent_fit: f(n)=0 at sampled n=" + std::to_string(n));
        BigFloat logf = log(to_bigfloat(f[n]));
        BigFloat s = -BigFloat(fit.degree) * logf / (BigFloat(n) * log(BigFloat(n)));
        fit.s.emplace_back(n, s);
    }
    fit.drift_first = abs(fit.s.front().second - 1);
    fit.drift_last = abs(fit.s.back().second - 1);
    return fit;
}

inline nlohmann::json saddle_report_to_json(const SaddleReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["r_n"] = bigfloat_to_string(r.r_n);
    j["B"] = bigfloat_to_string(r.B_rn);
    j["G_at_r"] = bigfloat_to_string(r.G_rn);
    j["estimate"] = bigfloat_to_string(r.estimate);
    j["exact"] = rational_to_string(r.exact);
    j["rel_err"] = bigfloat_to_string(r.rel_err);
    return j;
}

inline std::string saddle_reports_to_csv(const std::vector<SaddleReport>& rs) {
    std::ostringstream out;
    out << "n,r_n,B,G_at_r,estimate,exact,rel_err\n";
    for (const auto& r : rs)
        out << r.n << ',' << bigfloat_to_string(r.r_n) << ',' << bigfloat_to_string(r.B_rn)
            << ',' << bigfloat_to_string(r.G_rn) << ',' << bigfloat_to_string(r.estimate)
            << ',' << rational_to_string(r.exact) << ',' << bigfloat_to_string(r.rel_err)
            << '\n';
    return out.str();
}

}  // namespace egf

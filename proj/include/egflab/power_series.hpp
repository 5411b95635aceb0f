#pragma once

// Truncated power series over an exact-rational or big-float coefficient
// domain. Everything is "equality up to order N"; N is a caller decision.

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "egflab/numeric.hpp"
#include "egflab/sequence_rule.hpp"

namespace egf {

template <typename T>
class PowerSeries {
    static_assert(std::is_same_v<T, Rational> || std::is_same_v<T, BigFloat>);

  public:
    static constexpr bool exact = std::is_same_v<T, Rational>;

    PowerSeries(unsigned order, std::vector<T> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != order_ + 1)
            throw std::invalid_argument("coefficient vector must have order+1 entries");
    }

    static PowerSeries zero(unsigned order) {
        return PowerSeries(order, std::vector<T>(order + 1, T(0)));
    }

    // g(n) = rule(n) for 1 <= n <= order, g(0) = 0; with egf_weight the
    // coefficients are rule(n)/n!.
    static PowerSeries from_rule(const SequenceRule& rule, unsigned order,
                                 bool egf_weight = false) {
        std::vector<T> c(order + 1, T(0));
        for (unsigned n = 1; n <= order; ++n) {
            if constexpr (exact) {
                c[n] = rule.eval_exact(n);
                if (egf_weight) c[n] /= factorial(n);
            } else {
                c[n] = rule.eval_float(n);
                if (egf_weight) c[n] /= to_bigfloat(Rational(factorial(n)));
            }
        }
        return PowerSeries(order, std::move(c));
    }

    unsigned order() const { return order_; }
    const T& operator[](unsigned n) const { return coeffs_.at(n); }
    T& at(unsigned n) { return coeffs_.at(n); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    unsigned degree() const {
        for (unsigned n = order_ + 1; n-- > 0;)
            if (coeffs_[n] != 0) return n;
        return 0;
    }

    bool nonnegative() const {
        for (const auto& c : coeffs_)
            if (c < 0) return false;
        return true;
    }

    PowerSeries& operator+=(const PowerSeries& other) {
        check_compatible(other);
        for (unsigned n = 0; n <= order_; ++n) coeffs_[n] += other.coeffs_[n];
        return *this;
    }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }

    static std::string backend_name() { return exact ? "exact" : "float"; }

  private:
    void check_compatible(const PowerSeries& other) const {
        if (order_ != other.order_)
            throw std::invalid_argument("series order mismatch");
    }

    unsigned order_;
    std::vector<T> coeffs_;

    template <typename U>
    friend PowerSeries<U> ps_mul(const PowerSeries<U>&, const PowerSeries<U>&);
};

using RationalSeries = PowerSeries<Rational>;
using FloatSeries = PowerSeries<BigFloat>;

// Cauchy product truncated at the common order.
template <typename T>
PowerSeries<T> ps_mul(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("ps_mul: order mismatch");
    const unsigned N = a.order();
    std::vector<T> c(N + 1, T(0));
    for (unsigned i = 0; i <= N; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; i + j <= N; ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return PowerSeries<T>(N, std::move(c));
}

// f = exp(g) by the derivative recurrence n f(n) = sum_j j g(j) f(n-j).
template <typename T>
PowerSeries<T> series_exp(const PowerSeries<T>& g) {
    if (g[0] != 0)
        throw std::invalid_argument("series_exp: constant term must be zero");
    const unsigned N = g.order();
    std::vector<T> f(N + 1, T(0));
    f[0] = T(1);
    for (unsigned n = 1; n <= N; ++n) {
        T acc(0);
        for (unsigned j = 1; j <= n; ++j) {
            if (g[j] == 0) continue;
            acc += T(j) * g[j] * f[n - j];
        }
        f[n] = acc / n;
    }
    return PowerSeries<T>(N, std::move(f));
}

// Inverse recurrence: n g(n) = n f(n) - sum_{j<n} j g(j) f(n-j).
template <typename T>
PowerSeries<T> series_log(const PowerSeries<T>& f) {
    if (f[0] != 1)
        throw std::invalid_argument("series_log: constant term must be one");
    const unsigned N = f.order();
    std::vector<T> g(N + 1, T(0));
    for (unsigned n = 1; n <= N; ++n) {
        T acc = T(n) * f[n];
        for (unsigned j = 1; j < n; ++j) {
            if (g[j] == 0) continue;
            acc -= T(j) * g[j] * f[n - j];
        }
        g[n] = acc / n;
    }
    return PowerSeries<T>(N, std::move(g));
}

// A_U(x) = prod_j (1 - x^j)^{-p(j)}, computed as exp(sum_j p(j) sum_k x^{jk}/k).
// Exact: the result coefficients are nonnegative integers (asserted).
inline RationalSeries euler_product(const SequenceRule& p, unsigned N) {
    std::vector<Rational> logc(N + 1, Rational(0));
    for (unsigned j = 1; j <= N; ++j) {
        Rational pj = p.eval_exact(j);
        if (pj < 0 || denominator(pj) != 1)
            throw std::invalid_argument("euler_product: p(j) must be nonnegative integers");
        if (pj == 0) continue;
        for (unsigned k = 1; j * k <= N; ++k) logc[j * k] += pj / k;
    }
    RationalSeries a = series_exp(RationalSeries(N, std::move(logc)));
    for (unsigned n = 0; n <= N; ++n) {
        if (denominator(a[n]) != 1 || a[n] < 0)
            throw numeric_failure("euler_product: non-integer coefficient at n=" +
                                  std::to_string(n));
    }
    return a;
}

// Horner evaluation of the stored polynomial at x0 > 0.
template <typename T>
T eval_at_positive(const PowerSeries<T>& g, const T& x0) {
    if (x0 <= 0)
        throw std::invalid_argument("eval_at_positive: x0 must be positive");
    T acc(0);
    for (unsigned n = g.order() + 1; n-- > 0;) acc = acc * x0 + g[n];
    return acc;
}

template <typename T>
struct SplitPair {
    unsigned ell;
    PowerSeries<T> low;   // degrees <= ell
    PowerSeries<T> high;  // degrees >= ell+1
};

template <typename T>
SplitPair<T> split_at(const PowerSeries<T>& g, unsigned ell) {
    if (ell < 1 || ell > g.order())
        throw std::invalid_argument("split_at: ell out of range");
    if (g[ell] == 0)
        throw std::invalid_argument("split_at: coefficient at ell must be positive");
    std::vector<T> lo(g.order() + 1, T(0)), hi(g.order() + 1, T(0));
    for (unsigned n = 0; n <= g.order(); ++n)
        (n <= ell ? lo[n] : hi[n]) = g[n];
    return SplitPair<T>{ell, PowerSeries<T>(g.order(), std::move(lo)),
                        PowerSeries<T>(g.order(), std::move(hi))};
}

// --- serialization ---

template <typename T>
nlohmann::json series_to_json(const PowerSeries<T>& s) {
    nlohmann::json j;
    j["order"] = s.order();
    j["backend"] = PowerSeries<T>::backend_name();
    if constexpr (!PowerSeries<T>::exact) j["precision"] = current_precision_bits();
    nlohmann::json c = nlohmann::json::array();
    for (unsigned n = 0; n <= s.order(); ++n) {
        if constexpr (PowerSeries<T>::exact)
            c.push_back(rational_to_string(s[n]));
        else
            c.push_back(bigfloat_to_string(s[n]));
    }
    j["coeffs"] = c;
    return j;
}

inline RationalSeries series_from_json(const nlohmann::json& j) {
    if (j.at("backend").get<std::string>() != "exact")
        throw std::invalid_argument("series_from_json: only exact series files load");
    unsigned N = j.at("order").get<unsigned>();
    std::vector<Rational> c;
    for (const auto& s : j.at("coeffs"))
        c.push_back(rational_from_string(s.get<std::string>()));
    if (c.size() != N + 1)
        throw std::invalid_argument("series_from_json: coefficient count mismatch");
    return RationalSeries(N, std::move(c));
}

template <typename T>
std::string series_to_csv(const PowerSeries<T>& s) {
    std::ostringstream out;
    out << "n,coefficient\n";
    for (unsigned n = 0; n <= s.order(); ++n) {
        if constexpr (PowerSeries<T>::exact)
            out << n << ',' << rational_to_string(s[n]) << '\n';
        else
            out << n << ',' << bigfloat_to_string(s[n]) << '\n';
    }
    return out.str();
}

}  // namespace egf

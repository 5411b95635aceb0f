#pragma once

// Coefficient domains: exact rationals over unbounded integers, and
// arbitrary-precision floats with an explicit per-run precision.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace egf {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;

struct domain_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct numeric_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct insufficient_data : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct search_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned kDefaultPrecisionBits = 256;

// Boost's mpfr_float tracks precision in decimal digits; requests are in bits.
inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
}

inline void set_precision_bits(unsigned bits) {
    if (bits == 0) throw std::invalid_argument("precision must be positive");
    BigFloat::default_precision(bits_to_digits10(bits));
}

inline unsigned current_precision_bits() {
    return static_cast<unsigned>(BigFloat::default_precision() / 0.30103);
}

// Scoped precision override, restores the previous setting on exit.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits) : saved_(BigFloat::default_precision()) {
        set_precision_bits(bits);
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

inline BigFloat to_bigfloat(const Rational& q) { return BigFloat(q); }

enum class Ordering { Less, Equal, Greater };

// Three-way comparison with |a-b| <= tol collapsing to Equal.
inline Ordering compare_with_tolerance(const BigFloat& a, const BigFloat& b,
                                       const BigFloat& tol) {
    if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
    BigFloat diff = a - b;
    if (abs(diff) <= tol) return Ordering::Equal;
    return diff < 0 ? Ordering::Less : Ordering::Greater;
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

// floor(base^(p/q)) for nonnegative base, q >= 1.
inline Int floor_root_pow(const Int& base, const Int& p, const Int& q) {
    if (base < 0 || q < 1) throw std::invalid_argument("floor_root_pow: bad arguments");
    Int powed = pow(base, static_cast<unsigned>(p));
    Int root;
    mpz_root(root.backend().data(), powed.backend().data(), static_cast<unsigned long>(q));
    return root;
}

// floor(n^(alpha*n)) for rational alpha = p/q >= 0.
inline Int floor_power(unsigned n, const Rational& alpha) {
    if (alpha < 0) throw std::invalid_argument("floor_power: negative exponent");
    if (n == 0) return 1;  // 0^0 = 1 by convention
    Int p = numerator(alpha) * n;
    Int q = denominator(alpha);
    return floor_root_pow(Int(n), p, q);
}

// n^(alpha*n) in the float backend at the current precision.
inline BigFloat float_power(unsigned n, const Rational& alpha) {
    if (n == 0) return BigFloat(1);
    BigFloat ln = log(BigFloat(n));
    return exp(to_bigfloat(alpha) * n * ln);
}

inline std::string rational_to_string(const Rational& q) {
    return q.str();  // "p/q", canonical lowest terms
}

inline Rational rational_from_string(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

// Fixed-width decimal rendering so reports are byte-stable across runs.
inline std::string bigfloat_to_string(const BigFloat& x, unsigned digits = 40) {
    return x.str(digits, std::ios_base::scientific);
}

}  // namespace egf

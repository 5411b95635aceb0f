#pragma once

// Independent ground truth: exhaustive enumeration of small labelled and
// unlabelled structures. Nothing here touches the series engine; counts come
// from walking the structures themselves.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "egflab/numeric.hpp"

namespace egf {

struct OracleCount {
    std::string class_name;
    unsigned n;
    std::string side;  // "labelled" | "unlabelled"
    Int count;
    std::string method;
};

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unknown_class : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace oracle {

// --- labelled side -------------------------------------------------------

// Set partitions of [n], one leaf of the recursion per partition.
inline Int count_set_partitions(unsigned n) {
    Int total = 0;
    std::vector<unsigned> block_of(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned used) {
        if (i == n) { ++total; return; }
        for (unsigned b = 0; b <= used; ++b) {
            block_of[i] = b;
            rec(i + 1, b == used ? used + 1 : used);
        }
    };
    rec(0, 0);
    return total;
}

// Maps f : [n] -> [n] with f(f(i)) = f(i), walked via an odometer.
inline Int count_idempotent_maps(unsigned n) {
    if (n == 0) return 1;
    std::vector<unsigned> f(n, 0);
    Int total = 0;
    while (true) {
        bool ok = true;
        for (unsigned i = 0; i < n && ok; ++i) ok = f[f[i]] == f[i];
        if (ok) ++total;
        unsigned i = 0;
        while (i < n && ++f[i] == n) f[i++] = 0;
        if (i == n) break;
    }
    return total;
}

// Set partitions where each block carries a nonempty distinguished subset;
// subsets are counted by looping over bitmasks of each block.
inline Int count_selection_partitions(unsigned n) {
    Int total = 0;
    std::vector<unsigned> block_size;
    std::function<void(unsigned)> rec = [&](unsigned i) {
        if (i == n) {
            Int ways = 1;
            for (unsigned s : block_size) {
                unsigned nonempty = 0;
                for (std::uint32_t mask = 0; mask < (1u << s); ++mask)
                    if (mask != 0) ++nonempty;
                ways *= nonempty;
            }
            total += ways;
            return;
        }
        for (std::size_t b = 0; b < block_size.size(); ++b) {
            ++block_size[b];
            rec(i + 1);
            --block_size[b];
        }
        block_size.push_back(1);
        rec(i + 1);
        block_size.pop_back();
    };
    rec(0);
    return total;
}

// Connected labelled brooms on a set of s labels: the handle is an ordered
// chain of k = s/3 labels, two-colored; the 2k leaves are interchangeable.
inline Int count_labelled_brooms_connected(unsigned s) {
    if (s == 1) return 1;
    if (s < 3 || s % 3 != 0) return 0;
    unsigned k = s / 3;
    Int tuples = 0;
    std::vector<unsigned> chain(k, 0);
    std::function<void(unsigned, std::uint32_t)> rec = [&](unsigned pos, std::uint32_t used) {
        if (pos == k) { ++tuples; return; }
        for (unsigned v = 0; v < s; ++v)
            if (!(used & (1u << v))) rec(pos + 1, used | (1u << v));
    };
    rec(0, 0);
    unsigned colorings = 0;
    for (std::uint32_t c = 0; c < (1u << k); ++c) ++colorings;
    return tuples * colorings;
}

// Generic labelled total: partition the label set into components; each
// component is counted by the class's connected enumerator. Bitmask DP over
// subsets keeps the recursion honest without re-walking shared suffixes.
inline Int labelled_total(unsigned n, const std::function<Int(unsigned)>& connected) {
    if (n == 0) return 1;
    if (n > 24) throw cap_exceeded("labelled_total: n too large for bitmask enumeration");
    std::vector<Int> conn(n + 1);
    for (unsigned s = 1; s <= n; ++s) conn[s] = connected(s);
    std::map<std::uint32_t, Int> memo;
    std::function<Int(std::uint32_t)> rec = [&](std::uint32_t mask) -> Int {
        if (mask == 0) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::uint32_t low = mask & (~mask + 1);
        std::uint32_t rest = mask ^ low;
        Int total = 0;
        // all subsets of `rest`, each joined with the lowest element
        std::uint32_t sub = rest;
        while (true) {
            std::uint32_t comp = sub | low;
            unsigned size = static_cast<unsigned>(__builtin_popcount(comp));
            if (conn[size] != 0) total += conn[size] * rec(mask ^ comp);
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        memo[mask] = total;
        return total;
    };
    return rec((1u << n) - 1);
}

// --- unlabelled side -----------------------------------------------------

// Integer partitions of n, one leaf per partition.
inline Int count_integer_partitions(unsigned n) {
    std::function<Int(unsigned, unsigned)> rec = [&](unsigned left, unsigned maxpart) -> Int {
        if (left == 0) return 1;
        Int total = 0;
        for (unsigned p = std::min(left, maxpart); p >= 1; --p) total += rec(left - p, p);
        return total;
    };
    return rec(n, n);
}

// Multisets of m items drawn from t distinguishable types.
inline Int count_type_multisets(unsigned t, unsigned m) {
    if (m == 0) return 1;
    if (t == 0) return 0;
    Int total = 0;
    for (unsigned c = 0; c <= m; ++c) total += count_type_multisets(t - 1, m - c);
    return total;
}

// Multisets of connected unlabelled structures with sizes summing to n,
// where types_of(j) enumerates the distinct connected structures of size j.
inline Int unlabelled_total(unsigned n, const std::function<unsigned(unsigned)>& types_of) {
    std::function<Int(unsigned, unsigned)> rec = [&](unsigned left, unsigned maxsize) -> Int {
        if (left == 0) return 1;
        if (maxsize == 0) return 0;
        Int total = 0;
        unsigned t = types_of(maxsize);
        for (unsigned m = 0; m * maxsize <= left; ++m) {
            if (m > 0 && t == 0) break;
            total += count_type_multisets(t, m) * rec(left - m * maxsize, maxsize - 1);
        }
        return total;
    };
    return rec(n, n);
}

// Distinct unlabelled broom components of size s: color strings of the
// handle, walked one by one.
inline unsigned count_unlabelled_brooms_connected(unsigned s) {
    if (s == 1) return 1;
    if (s < 3 || s % 3 != 0) return 0;
    unsigned k = s / 3, types = 0;
    for (std::uint32_t c = 0; c < (1u << k); ++c) ++types;
    return types;
}

}  // namespace oracle

// Exhaustive count for one (class, n, side) cell. Caps keep every oracle at
// desk scale; see the table below.
inline OracleCount oracle_count(const std::string& cls, unsigned n, const std::string& side) {
    OracleCount out{cls, n, side, 0, ""};
    const bool labelled = side == "labelled";
    if (!labelled && side != "unlabelled")
        throw std::invalid_argument("oracle_count: side must be labelled or unlabelled");

    auto cap = [&](unsigned limit) {
        if (n > limit)
            throw cap_exceeded("oracle_count: n=" + std::to_string(n) + " above cap " +
                               std::to_string(limit) + " for " + cls + "/" + side);
    };

    if (cls == "equivalence-relations") {
        if (labelled) {
            cap(12);
            out.count = oracle::count_set_partitions(n);
            out.method = "enumerate set partitions";
        } else {
            cap(40);
            out.count = oracle::count_integer_partitions(n);
            out.method = "enumerate integer partitions";
        }
    } else if (cls == "integer-partitions") {
        cap(40);
        out.count = oracle::count_integer_partitions(n);
        out.method = "enumerate integer partitions";
    } else if (cls == "height1-forests") {
        if (labelled) {
            cap(8);
            out.count = oracle::count_idempotent_maps(n);
            out.method = "enumerate idempotent self-maps";
        } else {
            cap(40);
            out.count = oracle::count_integer_partitions(n);
            out.method = "enumerate integer partitions (one star per size)";
        }
    } else if (cls == "selection-partitions") {
        if (labelled) {
            cap(8);
            out.count = oracle::count_selection_partitions(n);
            out.method = "enumerate partitions x nonempty subset per block";
        } else {
            cap(25);
            out.count = oracle::unlabelled_total(n, [](unsigned j) { return j; });
            out.method = "enumerate multisets of (block, subset-size) components";
        }
    } else if (cls == "unary-predicates") {
        cap(1000);
        out.count = 1;  // the only structure is n isolated points
        out.method = "single decomposition into singletons";
    } else if (cls == "broom") {
        if (labelled) {
            cap(9);
            out.count = oracle::labelled_total(n, oracle::count_labelled_brooms_connected);
            out.method = "enumerate label-set partitions x chains x colorings";
        } else {
            cap(12);
            out.count = oracle::unlabelled_total(n, oracle::count_unlabelled_brooms_connected);
            out.method = "enumerate multisets of colored brooms";
        }
    } else if (cls == "finitely-generated-12") {
        cap(1000);
        if (labelled) throw cap_exceeded("finitely-generated-12: unlabelled oracle only");
        out.count = oracle::unlabelled_total(n, [](unsigned j) -> unsigned {
            return j <= 2 ? 1 : 0;
        });
        out.method = "enumerate multisets of parts {1,2}";
    } else {
        throw unknown_class("oracle_count: unknown class " + cls);
    }
    return out;
}

}  // namespace egf

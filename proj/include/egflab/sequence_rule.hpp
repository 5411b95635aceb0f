#pragma once

// Declarative coefficient-sequence recipes. A rule evaluates at any index
// n >= 0, deterministically, and knows whether its values are exactly
// rational. Rules serialize to a small JSON schema (see docs/formats.md).

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "egflab/numeric.hpp"

namespace egf {

class SequenceRule;
using RulePtr = std::shared_ptr<const SequenceRule>;

class SequenceRule {
  public:
    enum class Kind {
        ExplicitList,
        Polynomial,
        ConstantOne,
        Geometric,
        PowerOverFactorial,
        BinarySupport,
        Shifted,
        Scaled,
        Colored,
        Sum,
        NamedBuiltin,
    };

    // --- factories ---

    static RulePtr explicit_list(std::vector<Rational> values) {
        auto r = make(Kind::ExplicitList);
        r->values_ = std::move(values);
        return r;
    }

    // p(n) = sum_i coeffs[i] * n^i
    static RulePtr polynomial(std::vector<Rational> coeffs) {
        auto r = make(Kind::Polynomial);
        r->values_ = std::move(coeffs);
        return r;
    }

    static RulePtr constant_one() { return make(Kind::ConstantOne); }

    // c * b^n
    static RulePtr geometric(Rational c, Rational b) {
        auto r = make(Kind::Geometric);
        r->c_ = std::move(c);
        r->b_ = std::move(b);
        return r;
    }

    // n^(alpha n)/n!, exactly floor(n^(alpha n))/n! when the floor flag is set.
    // Without the floor the values are irrational: float backend only.
    static RulePtr power_over_factorial(Rational alpha, bool take_floor) {
        auto r = make(Kind::PowerOverFactorial);
        r->alpha_ = std::move(alpha);
        r->floor_ = take_floor;
        return r;
    }

    // indicator of a finite index set
    static RulePtr binary_support(std::set<unsigned> support) {
        auto r = make(Kind::BinarySupport);
        r->support_ = std::move(support);
        return r;
    }

    // inner(n - offset) for n >= offset, else 0
    static RulePtr shifted(RulePtr inner, unsigned offset) {
        auto r = make(Kind::Shifted);
        r->inner_ = std::move(inner);
        r->offset_ = offset;
        return r;
    }

    static RulePtr scaled(RulePtr inner, Rational factor) {
        auto r = make(Kind::Scaled);
        r->inner_ = std::move(inner);
        r->c_ = std::move(factor);
        return r;
    }

    // inner(n) * colors^n; the labelled-coloring transform
    static RulePtr colored(RulePtr inner, unsigned colors) {
        if (colors < 1) throw std::invalid_argument("colored: need at least one color");
        auto r = make(Kind::Colored);
        r->inner_ = std::move(inner);
        r->offset_ = colors;
        return r;
    }

    // pointwise sum of two rules
    static RulePtr sum(RulePtr a, RulePtr b) {
        auto r = make(Kind::Sum);
        r->inner_ = std::move(a);
        r->inner2_ = std::move(b);
        return r;
    }

    // tags: broom-labelled, broom-unlabelled
    static RulePtr named_builtin(const std::string& tag) {
        if (tag != "broom-labelled" && tag != "broom-unlabelled")
            throw std::invalid_argument("unknown builtin rule: " + tag);
        auto r = make(Kind::NamedBuiltin);
        r->tag_ = tag;
        return r;
    }

    // --- evaluation ---

    bool is_exact() const {
        switch (kind_) {
            case Kind::PowerOverFactorial: return floor_;
            case Kind::Shifted:
            case Kind::Scaled:
            case Kind::Colored: return inner_->is_exact();
            case Kind::Sum: return inner_->is_exact() && inner2_->is_exact();
            default: return true;
        }
    }

    Rational eval_exact(unsigned n) const {
        switch (kind_) {
            case Kind::ExplicitList:
                return n < values_.size() ? values_[n] : Rational(0);
            case Kind::Polynomial: {
                Rational acc = 0;  // Horner in n
                for (auto it = values_.rbegin(); it != values_.rend(); ++it)
                    acc = acc * n + *it;
                return acc;
            }
            case Kind::ConstantOne: return 1;
            case Kind::Geometric: {
                Rational p = 1;
                for (unsigned k = 0; k < n; ++k) p *= b_;
                return c_ * p;
            }
            case Kind::PowerOverFactorial:
                if (!floor_)
                    throw domain_mismatch(
                        "exact backend requested for float-only rule n^(an)/n!");
                return Rational(floor_power(n, alpha_), factorial(n));
            case Kind::BinarySupport: return support_.count(n) ? 1 : 0;
            case Kind::Shifted:
                return n >= offset_ ? inner_->eval_exact(n - offset_) : Rational(0);
            case Kind::Scaled: return c_ * inner_->eval_exact(n);
            case Kind::Colored: {
                Rational p = 1;
                for (unsigned k = 0; k < n; ++k) p *= offset_;
                return inner_->eval_exact(n) * p;
            }
            case Kind::Sum: return inner_->eval_exact(n) + inner2_->eval_exact(n);
            case Kind::NamedBuiltin: return builtin_exact(n);
        }
        throw std::logic_error("unreachable");
    }

    BigFloat eval_float(unsigned n) const {
        if (kind_ == Kind::PowerOverFactorial && !floor_) {
            // n^(alpha n)/n! via logs; exact at n = 0, 1
            if (n <= 1) return BigFloat(1);
            BigFloat ln = log(BigFloat(n));
            BigFloat lgam = lgamma(BigFloat(n + 1));
            return exp(to_bigfloat(alpha_) * n * ln - lgam);
        }
        return to_bigfloat(eval_exact(n));
    }

    // Largest index that can carry a nonzero value, when that is knowable.
    std::optional<unsigned> finite_support_bound() const {
        switch (kind_) {
            case Kind::ExplicitList:
                return values_.empty() ? 0 : static_cast<unsigned>(values_.size() - 1);
            case Kind::BinarySupport:
                return support_.empty() ? 0 : *support_.rbegin();
            case Kind::Shifted: {
                auto b = inner_->finite_support_bound();
                if (b) return *b + offset_;
                return std::nullopt;
            }
            case Kind::Scaled:
            case Kind::Colored: return inner_->finite_support_bound();
            case Kind::Sum: {
                auto a = inner_->finite_support_bound();
                auto b = inner2_->finite_support_bound();
                if (a && b) return std::max(*a, *b);
                return std::nullopt;
            }
            default: return std::nullopt;
        }
    }

    Kind kind() const { return kind_; }

    // --- JSON ---

    nlohmann::json to_json() const {
        using nlohmann::json;
        json j;
        switch (kind_) {
            case Kind::ExplicitList: {
                j["kind"] = "explicit";
                json v = json::array();
                for (const auto& q : values_) v.push_back(rational_to_string(q));
                j["values"] = v;
                break;
            }
            case Kind::Polynomial: {
                j["kind"] = "polynomial";
                json v = json::array();
                for (const auto& q : values_) v.push_back(rational_to_string(q));
                j["coeffs"] = v;
                break;
            }
            case Kind::ConstantOne: j["kind"] = "constant-one"; break;
            case Kind::Geometric:
                j["kind"] = "geometric";
                j["c"] = rational_to_string(c_);
                j["b"] = rational_to_string(b_);
                break;
            case Kind::PowerOverFactorial:
                j["kind"] = "power-over-factorial";
                j["alpha"] = rational_to_string(alpha_);
                j["floor"] = floor_;
                break;
            case Kind::BinarySupport: {
                j["kind"] = "binary-support";
                j["support"] = std::vector<unsigned>(support_.begin(), support_.end());
                break;
            }
            case Kind::Shifted:
                j["kind"] = "shifted";
                j["offset"] = offset_;
                j["rule"] = inner_->to_json();
                break;
            case Kind::Scaled:
                j["kind"] = "scaled";
                j["factor"] = rational_to_string(c_);
                j["rule"] = inner_->to_json();
                break;
            case Kind::Colored:
                j["kind"] = "colored";
                j["colors"] = offset_;
                j["rule"] = inner_->to_json();
                break;
            case Kind::Sum:
                j["kind"] = "sum";
                j["a"] = inner_->to_json();
                j["b"] = inner2_->to_json();
                break;
            case Kind::NamedBuiltin:
                j["kind"] = "named-builtin";
                j["tag"] = tag_;
                break;
        }
        return j;
    }

    static RulePtr from_json(const nlohmann::json& j) {
        const std::string kind = j.at("kind").get<std::string>();
        auto rats = [](const nlohmann::json& arr) {
            std::vector<Rational> out;
            for (const auto& s : arr) out.push_back(rational_from_string(s.get<std::string>()));
            return out;
        };
        if (kind == "explicit") return explicit_list(rats(j.at("values")));
        if (kind == "polynomial") return polynomial(rats(j.at("coeffs")));
        if (kind == "constant-one") return constant_one();
        if (kind == "geometric")
            return geometric(rational_from_string(j.at("c").get<std::string>()),
                             rational_from_string(j.at("b").get<std::string>()));
        if (kind == "power-over-factorial")
            return power_over_factorial(
                rational_from_string(j.at("alpha").get<std::string>()),
                j.at("floor").get<bool>());
        if (kind == "binary-support") {
            std::set<unsigned> s;
            for (const auto& v : j.at("support")) s.insert(v.get<unsigned>());
            return binary_support(std::move(s));
        }
        if (kind == "shifted")
            return shifted(from_json(j.at("rule")), j.at("offset").get<unsigned>());
        if (kind == "scaled")
            return scaled(from_json(j.at("rule")),
                          rational_from_string(j.at("factor").get<std::string>()));
        if (kind == "colored")
            return colored(from_json(j.at("rule")), j.at("colors").get<unsigned>());
        if (kind == "sum") return sum(from_json(j.at("a")), from_json(j.at("b")));
        if (kind == "named-builtin") return named_builtin(j.at("tag").get<std::string>());
        throw std::invalid_argument("unknown rule kind: " + kind);
    }

  private:
    static std::shared_ptr<SequenceRule> make(Kind k) {
        auto r = std::shared_ptr<SequenceRule>(new SequenceRule());
        r->kind_ = k;
        return r;
    }

    SequenceRule() = default;

    Rational builtin_exact(unsigned n) const {
        if (tag_ == "broom-labelled") {
            // p_L(1) = 1; p_L(3m) = 2^m (3m)!/(2m)!: chain order times colorings
            if (n == 1) return 1;
            if (n >= 3 && n % 3 == 0) {
                unsigned m = n / 3;
                Int v = factorial(n) / factorial(2 * m);
                return Rational(v << m);
            }
            return 0;
        }
        if (tag_ == "broom-unlabelled") {
            if (n == 1) return 1;
            if (n >= 3 && n % 3 == 0) {
                Int v = Int(1) << (n / 3);
                return Rational(v);
            }
            return 0;
        }
        throw std::logic_error("unknown builtin tag");
    }

    Kind kind_{};
    std::vector<Rational> values_;  // explicit values or polynomial coeffs
    Rational c_{0}, b_{0}, alpha_{0};
    bool floor_ = false;
    std::set<unsigned> support_;
    RulePtr inner_;
    RulePtr inner2_;
    unsigned offset_ = 0;  // shift offset, or color count
    std::string tag_;
};

inline Rational eval_rule(const SequenceRule& rule, unsigned n) {
    return rule.eval_exact(n);
}

inline BigFloat eval_rule_float(const SequenceRule& rule, unsigned n) {
    return rule.eval_float(n);
}

}  // namespace egf

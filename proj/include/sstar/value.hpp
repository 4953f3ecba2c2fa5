#ifndef SSTAR_VALUE_HPP
#define SSTAR_VALUE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <utility>
#include <variant>

namespace sstar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact output value of a model: integer, non-integer rational in lowest
/// terms, symbolic atom, or a (score, indicator) pair for classifiers.
/// Rationals with denominator 1 normalize to the integer form, so equality
/// across construction routes stays exact.
class OutputValue {
public:
    struct Atom {
        std::string name;
        auto operator<=>(const Atom&) const = default;
    };
    struct ScorePair {
        Rational score;
        std::string indicator;
        bool operator==(const ScorePair&) const = default;
    };

    static OutputValue integer(BigInt v) { return OutputValue(Storage(std::move(v))); }

    static OutputValue rational(Rational v) {
        if (boost::multiprecision::denominator(v) == 1)
            return OutputValue(Storage(BigInt(boost::multiprecision::numerator(v))));
        return OutputValue(Storage(std::move(v)));
    }

    static OutputValue atom(std::string name) { return OutputValue(Storage(Atom{std::move(name)})); }

    static OutputValue score_pair(Rational score, std::string indicator) {
        return OutputValue(Storage(ScorePair{std::move(score), std::move(indicator)}));
    }

    static OutputValue null_atom() { return atom("NULL"); }

    bool is_integer() const { return std::holds_alternative<BigInt>(v_); }
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_numeric() const { return is_integer() || is_rational(); }
    bool is_atom() const { return std::holds_alternative<Atom>(v_); }
    bool is_pair() const { return std::holds_alternative<ScorePair>(v_); }

    const BigInt& as_integer() const { return std::get<BigInt>(v_); }
    const Rational& as_rational() const { return std::get<Rational>(v_); }
    const Atom& as_atom() const { return std::get<Atom>(v_); }
    const ScorePair& as_pair() const { return std::get<ScorePair>(v_); }

    /// Numeric view of either numeric alternative.
    Rational numeric() const {
        if (is_integer()) return Rational(as_integer());
        return as_rational();
    }

    bool operator==(const OutputValue& o) const {
        if (kind_rank() != o.kind_rank()) {
            if (is_numeric() && o.is_numeric()) return numeric() == o.numeric();
            return false;
        }
        return v_ == o.v_;
    }

    /// Total order: numerics (by value) < atoms (by name) < pairs (by score, indicator).
    bool operator<(const OutputValue& o) const {
        int a = is_numeric() ? 0 : kind_rank();
        int b = o.is_numeric() ? 0 : o.kind_rank();
        if (a != b) return a < b;
        switch (a) {
        case 0: return numeric() < o.numeric();
        case 2: return as_atom() < o.as_atom();
        default: {
            const auto& p = as_pair();
            const auto& q = o.as_pair();
            if (p.score != q.score) return p.score < q.score;
            return p.indicator < q.indicator;
        }
        }
    }

    std::string str() const {
        if (is_integer()) return as_integer().str();
        if (is_rational()) {
            return boost::multiprecision::numerator(as_rational()).str() + "/" +
                   boost::multiprecision::denominator(as_rational()).str();
        }
        if (is_atom()) return as_atom().name;
        const auto& p = as_pair();
        return "(" + rational(p.score).str() + ", " + p.indicator + ")";
    }

private:
    using Storage = std::variant<BigInt, Rational, Atom, ScorePair>;

    explicit OutputValue(Storage v) : v_(std::move(v)) {}

    int kind_rank() const { return static_cast<int>(v_.index()); } // 0 int, 1 rat, 2 atom, 3 pair

    Storage v_;
};

} // namespace sstar

#endif

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace branched {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with positive
/// denominator. All invariants in this library are computed over Rational;
/// there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

using Area = std::int64_t;

inline Integer rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& q) {
    const Integer num = rational_num(q);
    const Integer den = rational_den(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p", "-p", "p/q". Returns nullopt on malformed input.
inline std::optional<Rational> rational_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    const auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(s)) return std::nullopt;
            return Rational(Integer(s));
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Integer d(den);
        if (d == 0) return std::nullopt;
        return Rational(Integer(num), d);
    } catch (...) {
        return std::nullopt;
    }
}

/// A length or angle carried as a rational multiple of pi. Every comparison
/// reduces to a comparison of the coefficients, which keeps all curvature
/// certificates bit-exact.
struct PiRational {
    Rational coef;  // value = coef * pi

    PiRational() = default;
    explicit PiRational(Rational c) : coef(std::move(c)) {}
    PiRational(long num, long den) : coef(num, den) {}

    PiRational operator+(const PiRational& o) const { return PiRational(coef + o.coef); }
    PiRational operator-(const PiRational& o) const { return PiRational(coef - o.coef); }
    PiRational operator-() const { return PiRational(-coef); }
    PiRational& operator+=(const PiRational& o) {
        coef += o.coef;
        return *this;
    }
    PiRational& operator-=(const PiRational& o) {
        coef -= o.coef;
        return *this;
    }
    /// Scaling by an exact rational (angles times integers, averages, ...).
    PiRational operator*(const Rational& r) const { return PiRational(coef * r); }

    auto operator<=>(const PiRational& o) const = default;

    std::string str() const { return rational_to_string(coef) + "*pi"; }
};

inline PiRational pi_times(long num, long den = 1) { return PiRational(num, den); }

}  // namespace branched

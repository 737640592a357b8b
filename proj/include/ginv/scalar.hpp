#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace ginv {

// Exact scalar: arbitrary precision fraction, always canonical (lowest terms,
// positive denominator) after every operation.
using Rational = mpq_class;

enum class Mode { Rational, Float };

inline std::string_view mode_name(Mode m) {
    return m == Mode::Rational ? "rational" : "float";
}

inline Mode mode_from_name(std::string_view name) {
    if (name == "rational") return Mode::Rational;
    if (name == "float") return Mode::Float;
    throw parse_error("unknown mode '" + std::string(name) + "' (expected rational or float)");
}

// Relative threshold used by Float mode for pivot acceptance and identity
// checks. Rational mode ignores it.
struct Tolerance {
    double rel = 1e-9;
};

template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr Mode mode = Mode::Rational;

    static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
    static bool is_zero(const Rational& x, const Tolerance&, double) { return sgn(x) == 0; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr Mode mode = Mode::Float;

    static double magnitude(double x) { return std::fabs(x); }
    // |x| <= rel * max(1, scale)
    static bool is_zero(double x, const Tolerance& tol, double scale) {
        return std::fabs(x) <= tol.rel * std::max(1.0, scale);
    }
};

template <typename T>
concept Field = requires(const T& a, const T& b) {
    { scalar_traits<T>::exact } -> std::convertible_to<bool>;
    { a + b };
    { a - b };
    { a * b };
    { a / b };
    { a == b } -> std::convertible_to<bool>;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional leading sign on p.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_int(num) || den.empty() || den.front() == '-' || den.front() == '+' || !is_int(den))
        throw parse_error("invalid rational literal '" + std::string(text) + "'");
    auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
    mpz_class n(std::string(strip_plus(num)), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string format_rational(const Rational& r) { return r.get_str(10); }

} // namespace ginv

#pragma once

// Exact rationals backed by GMP, plus the parsing and decimal rendering
// used throughout the library and CLI.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ihg {

/// Arbitrary-precision fraction. Always kept canonical: gcd(|num|, den) = 1, den > 0.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_fraction_string(const Rational& r) {
    // mpq_class::get_str already prints "n" or "n/d" in lowest terms.
    return r.get_str();
}

/// Parses "3", "-2", "0.5", ".25", "1/2", "-7/3". Returns nullopt on anything else
/// (including a zero denominator).
inline std::optional<Rational> parse_rational(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;

    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den)) return std::nullopt;
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) return std::nullopt;
        result = Rational(n, d);
        result.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) return std::nullopt;
        if (!whole.empty() && !is_digits(whole)) return std::nullopt;
        if (!frac.empty() && !is_digits(frac)) return std::nullopt;
        mpz_class n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
        result = Rational(n, d);
        result.canonicalize();
    } else {
        if (!is_digits(s)) return std::nullopt;
        result = Rational(mpz_class(std::string(s), 10));
    }
    if (negative) result = -result;
    return result;
}

/// Fixed-point rendering with `precision` digits after the point, rounding
/// half away from zero. 65/7 at precision 2 is "9.29"; -1/8 is "-0.13".
inline std::string to_decimal_string(const Rational& r, std::size_t precision = 2) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, precision);

    mpz_class num = abs(r.get_num()) * scale;
    const mpz_class& den = r.get_den();
    // floor((2*num + den) / (2*den)) == round-half-up of num/den for num >= 0
    mpz_class rounded = (2 * num + den) / (2 * den);

    std::string digits = rounded.get_str();
    if (digits.size() <= precision) digits.insert(0, precision + 1 - digits.size(), '0');

    std::string out;
    if (r < 0 && rounded != 0) out.push_back('-');
    out += digits.substr(0, digits.size() - precision);
    if (precision > 0) {
        out.push_back('.');
        out += digits.substr(digits.size() - precision);
    }
    return out;
}

} // namespace ihg

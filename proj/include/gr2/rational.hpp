#pragma once

// Exact rational arithmetic and its canonical text form ("p/q", integers
// without "/1").

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gr2 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace detail {

inline Integer parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    Integer v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace detail

/// Parses "p", "p/q" or a terminating decimal such as "-1.25". Surrounding
/// whitespace is ignored.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = detail::parse_integer(s.substr(0, slash), text);
        Integer den = detail::parse_integer(s.substr(slash + 1), text);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = Rational(num, den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        Integer whole = ip.empty() ? Integer(0) : detail::parse_integer(ip, text);
        Integer frac = fp.empty() ? Integer(0) : detail::parse_integer(fp, text);
        Integer scale = 1;
        for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
        value = Rational(whole * scale + frac, scale);
    } else {
        value = Rational(detail::parse_integer(s, text));
    }
    return negative ? Rational(-value) : value;
}

/// Decimal text when the expansion terminates, "p/q" otherwise.
inline std::string to_decimal_or_fraction(const Rational& q) {
    Integer den = boost::multiprecision::denominator(q);
    int twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return to_string(q);
    const int digits = std::max(twos, fives);
    if (digits == 0) return to_string(q);
    Integer scale = 1;
    for (int k = 0; k < digits; ++k) scale *= 10;
    const Rational scaled = q * scale;
    Integer num = boost::multiprecision::numerator(scaled);
    const bool negative = num < 0;
    if (negative) num = -num;
    std::string s = num.str();
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return negative ? "-" + s : s;
}

}  // namespace gr2

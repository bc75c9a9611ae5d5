#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>
#include <string_view>

#include "crn/error.hpp"

namespace crn {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar used everywhere in the analysis path. Stored in
/// lowest terms with a positive denominator; no floating point is involved
/// at any point.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw Error("rational with zero denominator");
    if (den < 0)
        return Rational(-num, -den);
    return Rational(num, den);
}

inline bool is_integer(const Rational& value) {
    return denominator(value) == 1;
}

/// Parses an integer ("3", "-12"), a finite decimal ("0.36" -> 9/25) or a
/// fraction ("3/4") without any rounding.
inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    const auto fail = [&](const std::string& why) -> Rational {
        throw Error("bad rational '" + std::string(text) + "': " + why);
    };

    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }

    const auto read_digits = [&]() -> Int {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("digit expected");
        Int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        return value;
    };

    Int whole = read_digits();
    Rational result(whole);

    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t start = pos;
        Int frac = read_digits();
        Int scale = 1;
        for (std::size_t i = start; i < pos; ++i)
            scale *= 10;
        result += make_rational(frac, scale);
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        Int den = read_digits();
        if (den == 0)
            fail("zero denominator");
        result = make_rational(whole, den);
    }

    if (pos != text.size())
        fail("trailing characters");
    return negative ? Rational(-result) : result;
}

/// "3", "-4/7". Integers are printed without a denominator.
inline std::string to_string(const Rational& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

} // namespace crn

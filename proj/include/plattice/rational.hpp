#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "plattice/errors.hpp"

namespace plat {

/// Exact rational number, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Canonical rendering: "p/q", integers without the "/1".
inline std::string to_string(const Rational& r) {
    if (rat_den(r) == 1)
        return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Decimal approximation with a fixed number of digits after the point.
inline std::string to_decimal_string(const Rational& r, unsigned decimals) {
    Integer scale = 1;
    for (unsigned i = 0; i < decimals; ++i)
        scale *= 10;
    Integer num = rat_num(r) * scale;
    Integer den = rat_den(r);
    bool negative = num < 0;
    if (negative)
        num = -num;
    // round half away from zero
    Integer q = (num + den / 2) / den;
    Integer whole = q / scale;
    Integer frac = q % scale;
    std::string out = (negative && q != 0 ? "-" : "") + whole.str();
    if (decimals > 0) {
        std::string f = frac.str();
        out += "." + std::string(decimals - f.size(), '0') + f;
    }
    return out;
}

/// Parses "p" or "p/q" (q > 0). Throws ParseError on malformed input.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&](const char* why) -> ParseError {
        return ParseError(std::string(why) + ": '" + std::string(text) + "'");
    };
    if (text.empty())
        throw bad("empty rational");
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '-' || text[pos] == '+') {
        neg = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::size_t from) {
        std::size_t i = from;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
            ++i;
        return i;
    };
    std::size_t num_end = digits(pos);
    if (num_end == pos)
        throw bad("malformed rational");
    Integer num(std::string(text.substr(pos, num_end - pos)));
    if (neg)
        num = -num;
    if (num_end == text.size())
        return Rational(num);
    if (text[num_end] != '/')
        throw bad("malformed rational");
    std::size_t den_begin = num_end + 1;
    std::size_t den_end = digits(den_begin);
    if (den_end == den_begin || den_end != text.size())
        throw bad("malformed rational");
    Integer den(std::string(text.substr(den_begin, den_end - den_begin)));
    if (den == 0)
        throw bad("zero denominator");
    return Rational(num, den);
}

inline Integer floor_rational(const Rational& r) {
    Integer num = rat_num(r);
    Integer den = rat_den(r);
    if (num >= 0)
        return num / den;
    return -((-num + den - 1) / den);
}

} // namespace plat

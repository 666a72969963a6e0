#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "nctorus/errors.hpp"

namespace nctorus {

// Exact arithmetic used by the fields module. Arbitrary precision so that
// characteristic-polynomial round trips stay exact for desk-scale degrees.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" into an exact rational. Whitespace is not allowed.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    try {
        Rational r(text);
        return r;
    } catch (const std::exception&) {
        throw ParseError("invalid rational literal: '" + text + "'");
    }
}

/// Renders as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    return r.str();
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace nctorus

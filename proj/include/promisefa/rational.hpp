#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "promisefa/errors.hpp"

namespace promisefa {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses "p", "-p" or "p/q". Used by the JSON machine format.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw ValidationError("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw ValidationError("malformed rational \"" + text + "\"");
    }
}

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace promisefa

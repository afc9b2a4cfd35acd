#pragma once

// Exact arithmetic types shared by every module.

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Reduced "numerator/denominator" form; the denominator is always printed.
inline std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const Integer& i) { return i.str(); }

/// Accepts "p/q", "p" or "-p/q".
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + text + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

inline Integer factorial(int n) {
    Integer result = 1;
    for (int i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

}  // namespace qmn

#ifndef APOLAR_RATIONAL_HPP
#define APOLAR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace apolar {

// Exact arbitrary-precision rational scalar. Always normalized:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with any sign on den. The cpp_rational two-argument
// constructor rejects negative denominators, so route through division.
inline Rational make_rational(Integer num, Integer den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational rational_pow(const Rational& base, int exp) {
    Rational r(1);
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// "p" when den == 1, otherwise "p/q".
std::string format_rational(const Rational& q);

// Accepts "p" or "p/q" with optional leading sign. Throws SyntaxError.
Rational parse_rational(std::string_view text);

using Point = std::vector<Rational>;

// "(a, b)" style, for error messages and human-readable reports.
std::string format_point(const Point& p);

// Comma-separated coordinates, e.g. "1/2,-3". Throws SyntaxError.
Point parse_point(std::string_view text);

}  // namespace apolar

#endif

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace coneindex {

// All spectral data is exact: index jumps happen exactly at eigenvalue
// crossings, so no floating point is allowed anywhere in the counting or
// eta machinery. Arbitrary precision keeps large multiplicity sums safe.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

bool is_integer(const Rational& q);

// Floor/ceil with exact semantics for negative values.
Integer floor_rational(const Rational& q);
Integer ceil_rational(const Rational& q);

// Requires is_integer(q).
Integer to_integer(const Rational& q);

double to_double(const Rational& q);

// q^e for e >= 0.
Rational pow_rational(const Rational& q, unsigned e);

Integer factorial(unsigned n);

// C(n, k) as an exact integer; zero when k > n.
Integer binomial(const Integer& n, const Integer& k);

// Parses "a/b", plain integers, and decimal literals ("1.5" -> 3/2).
// Decimal input is converted exactly; anything else is a ParseError.
Rational parse_rational(std::string_view text);

// Canonical form: "a" for integers, "a/b" otherwise (b > 0).
std::string rational_to_string(const Rational& q);

}  // namespace coneindex

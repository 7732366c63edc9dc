#include "coneindex/rational.hpp"

#include "coneindex/errors.hpp"

#include <cctype>

namespace coneindex {

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

Integer floor_rational(const Rational& q) {
    Integer num = numerator(q);
    Integer den = denominator(q);
    Integer quot = num / den;
    if (num < 0 && quot * den != num)
        --quot;
    return quot;
}

Integer ceil_rational(const Rational& q) {
    return -floor_rational(-q);
}

Integer to_integer(const Rational& q) {
    if (!is_integer(q))
        throw InvalidArgument("expected integer value, got " + rational_to_string(q));
    return numerator(q);
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

Rational pow_rational(const Rational& q, unsigned e) {
    Rational result(1);
    Rational base = q;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

Integer factorial(unsigned n) {
    Integer f(1);
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

Integer binomial(const Integer& n, const Integer& k) {
    if (k < 0 || k > n)
        return Integer(0);
    Integer kk = k;
    if (n - k < kk)
        kk = n - k;
    Integer result(1);
    for (Integer i = 0; i < kk; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: result is always a binomial prefix
    }
    return result;
}

namespace {

bool is_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_unsigned_integer(std::string_view s, std::string_view original) {
    if (!is_digits(s))
        throw ParseError("invalid rational literal '" + std::string(original) + "'");
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty())
        throw ParseError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty())
        throw ParseError("invalid rational literal '" + std::string(text) + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_unsigned_integer(s.substr(0, slash), text);
        Integer den = parse_unsigned_integer(s.substr(slash + 1), text);
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rational(num, den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw ParseError("invalid rational literal '" + std::string(text) + "'");
        Integer w = whole.empty() ? Integer(0) : parse_unsigned_integer(whole, text);
        Integer f(0), scale(1);
        if (!frac.empty()) {
            f = parse_unsigned_integer(frac, text);
            for (size_t i = 0; i < frac.size(); ++i)
                scale *= 10;
        }
        value = Rational(w) + Rational(f, scale);
    } else {
        value = Rational(parse_unsigned_integer(s, text));
    }
    return negative ? -value : value;
}

std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

}  // namespace coneindex

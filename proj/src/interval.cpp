#include "coneindex/interval.hpp"

#include "coneindex/errors.hpp"

namespace coneindex {

Interval::Interval(std::optional<Rational> lower, std::optional<Rational> upper,
                   bool lower_closed, bool upper_closed)
    : lower_(std::move(lower)),
      upper_(std::move(upper)),
      lower_closed_(lower_closed),
      upper_closed_(upper_closed) {}

Interval Interval::make(std::optional<Rational> lower, std::optional<Rational> upper,
                        bool lower_closed, bool upper_closed) {
    if (lower && upper && *lower > *upper)
        throw InvalidArgument("interval lower bound exceeds upper bound");
    // Unbounded sides carry no closedness; normalize so == is structural.
    if (!lower)
        lower_closed = false;
    if (!upper)
        upper_closed = false;
    return Interval(std::move(lower), std::move(upper), lower_closed, upper_closed);
}

Interval Interval::half_open(const Rational& lo, const Rational& hi) {
    return make(lo, hi, true, false);
}

Interval Interval::closed(const Rational& lo, const Rational& hi) {
    return make(lo, hi, true, true);
}

Interval Interval::open(const Rational& lo, const Rational& hi) {
    return make(lo, hi, false, false);
}

Interval Interval::singleton(const Rational& x) {
    return make(x, x, true, true);
}

Interval Interval::closed_or_empty(const Rational& lo, const Rational& hi) {
    if (lo > hi)
        return empty();
    return closed(lo, hi);
}

Interval Interval::ray_from(const Rational& lo, bool closed) {
    return make(lo, std::nullopt, closed, false);
}

Interval Interval::ray_below(const Rational& hi, bool closed) {
    return make(std::nullopt, hi, false, closed);
}

Interval Interval::all() {
    return make(std::nullopt, std::nullopt, false, false);
}

Interval Interval::empty() {
    return make(Rational(0), Rational(0), false, false);
}

bool Interval::is_empty() const {
    return lower_ && upper_ && *lower_ == *upper_ && !(lower_closed_ && upper_closed_);
}

bool Interval::contains(const Rational& x) const {
    if (lower_) {
        if (x < *lower_ || (x == *lower_ && !lower_closed_))
            return false;
    }
    if (upper_) {
        if (x > *upper_ || (x == *upper_ && !upper_closed_))
            return false;
    }
    return true;
}

bool Interval::subset_of(const Interval& other) const {
    if (is_empty())
        return true;
    if (other.is_empty())
        return false;
    if (other.lower_) {
        if (!lower_)
            return false;
        if (*lower_ < *other.lower_)
            return false;
        if (*lower_ == *other.lower_ && lower_closed_ && !other.lower_closed_)
            return false;
    }
    if (other.upper_) {
        if (!upper_)
            return false;
        if (*upper_ > *other.upper_)
            return false;
        if (*upper_ == *other.upper_ && upper_closed_ && !other.upper_closed_)
            return false;
    }
    return true;
}

std::string Interval::to_string() const {
    std::string s;
    s += lower_closed_ ? '[' : '(';
    s += lower_ ? rational_to_string(*lower_) : std::string("-inf");
    s += ", ";
    s += upper_ ? rational_to_string(*upper_) : std::string("inf");
    s += upper_closed_ ? ']' : ')';
    return s;
}

}  // namespace coneindex

#pragma once

#include "coneindex/rational.hpp"

#include <optional>
#include <string>

namespace coneindex {

// An interval of eigenvalues with exact rational endpoints, each side
// independently open/closed/unbounded. Counting, spectral projections and
// eta cuts are all phrased through these; the endpoint flags matter because
// index jumps happen exactly when a cut touches an eigenvalue.
class Interval {
public:
    // [lo, hi) -- the counting interval N[lo, hi).
    static Interval half_open(const Rational& lo, const Rational& hi);
    static Interval closed(const Rational& lo, const Rational& hi);
    static Interval open(const Rational& lo, const Rational& hi);
    static Interval singleton(const Rational& x);
    // Closed interval, or the empty interval when lo > hi.
    static Interval closed_or_empty(const Rational& lo, const Rational& hi);
    // [lo, +inf) or (lo, +inf)
    static Interval ray_from(const Rational& lo, bool closed = true);
    // (-inf, hi) or (-inf, hi]
    static Interval ray_below(const Rational& hi, bool closed = false);
    static Interval all();
    static Interval empty();

    static Interval make(std::optional<Rational> lower, std::optional<Rational> upper,
                         bool lower_closed, bool upper_closed);

    const std::optional<Rational>& lower() const { return lower_; }
    const std::optional<Rational>& upper() const { return upper_; }
    bool lower_closed() const { return lower_closed_; }
    bool upper_closed() const { return upper_closed_; }
    bool bounded() const { return lower_.has_value() && upper_.has_value(); }

    bool is_empty() const;
    bool contains(const Rational& x) const;
    bool subset_of(const Interval& other) const;

    bool operator==(const Interval& other) const = default;

    // "[3/2, 5/2)", "(-inf, 0]", ...
    std::string to_string() const;

private:
    Interval(std::optional<Rational> lower, std::optional<Rational> upper,
             bool lower_closed, bool upper_closed);

    std::optional<Rational> lower_;
    std::optional<Rational> upper_;
    bool lower_closed_;
    bool upper_closed_;
};

}  // namespace coneindex

#include "coneindex/spectra.hpp"

#include "coneindex/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace coneindex {

namespace {

constexpr long long kRefinementCap = 4096;

Rational abs_rat(const Rational& x) {
    return x < 0 ? Rational(-x) : x;
}

// gcd/lcm on positive rationals: gcd is the largest rational dividing both
// into integers, lcm the smallest positive common integer multiple.
Rational rational_gcd(const Rational& a, const Rational& b) {
    Integer num = gcd(numerator(a) * denominator(b), numerator(b) * denominator(a));
    return Rational(num, denominator(a) * denominator(b));
}

Rational rational_lcm(const Rational& a, const Rational& b) {
    return a * b / rational_gcd(a, b);
}

}  // namespace

MultiplicityPolynomial::MultiplicityPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back() == 0)
        coefficients_.pop_back();
    if (coefficients_.empty())
        return;
    if (coefficients_.size() > 1 && coefficients_.back() < 0)
        throw InvariantViolation(
            "multiplicity polynomial has negative leading coefficient, so it is "
            "eventually negative");
    for (unsigned k = 0; k <= kMultiplicityCheckRange; ++k) {
        Rational v = eval(Rational(k));
        if (!is_integer(v) || v < 0)
            throw InvariantViolation("multiplicity polynomial evaluates to " +
                                     rational_to_string(v) + " at k = " + std::to_string(k));
    }
}

MultiplicityPolynomial MultiplicityPolynomial::constant(const Integer& value) {
    if (value == 0)
        return MultiplicityPolynomial(std::vector<Rational>{});
    return MultiplicityPolynomial({Rational(value)});
}

unsigned MultiplicityPolynomial::degree() const {
    return coefficients_.empty() ? 0 : static_cast<unsigned>(coefficients_.size() - 1);
}

Rational MultiplicityPolynomial::eval(const Rational& k) const {
    Rational acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * k + *it;
    return acc;
}

Integer MultiplicityPolynomial::eval_count(const Integer& k) const {
    Rational v = eval(Rational(k));
    if (!is_integer(v) || v < 0)
        throw InvariantViolation("multiplicity polynomial evaluates to " + rational_to_string(v) +
                                 " at k = " + k.str());
    return numerator(v);
}

MultiplicityPolynomial MultiplicityPolynomial::shifted(const Integer& shift) const {
    return composed_affine(Integer(1), shift);
}

MultiplicityPolynomial MultiplicityPolynomial::composed_affine(const Integer& stride,
                                                               const Integer& rem) const {
    // m(stride*k + rem) = sum_i c_i (stride*k + rem)^i, expanded binomially.
    std::vector<Rational> out(coefficients_.size(), Rational(0));
    for (size_t i = 0; i < coefficients_.size(); ++i) {
        const Rational& ci = coefficients_[i];
        if (ci == 0)
            continue;
        for (size_t j = 0; j <= i; ++j) {
            Rational term = ci * Rational(binomial(Integer(i), Integer(j)));
            term *= pow_rational(Rational(stride), static_cast<unsigned>(j));
            term *= pow_rational(Rational(rem), static_cast<unsigned>(i - j));
            out[j] += term;
        }
    }
    return MultiplicityPolynomial(std::move(out));
}

MultiplicityPolynomial MultiplicityPolynomial::operator+(
    const MultiplicityPolynomial& other) const {
    std::vector<Rational> out(std::max(coefficients_.size(), other.coefficients_.size()),
                              Rational(0));
    for (size_t i = 0; i < coefficients_.size(); ++i)
        out[i] += coefficients_[i];
    for (size_t i = 0; i < other.coefficients_.size(); ++i)
        out[i] += other.coefficients_[i];
    return MultiplicityPolynomial(std::move(out));
}

EigenvalueProgression::EigenvalueProgression(int sign_in, Rational offset_in,
                                             MultiplicityPolynomial multiplicity_in,
                                             Rational step_in)
    : sign(sign_in),
      offset(std::move(offset_in)),
      step(std::move(step_in)),
      multiplicity(std::move(multiplicity_in)) {
    if (sign != 1 && sign != -1)
        throw InvalidArgument("progression sign must be +1 or -1");
    if (offset <= 0)
        throw InvalidArgument("progression offset must be positive");
    if (step <= 0)
        throw InvalidArgument("progression step must be positive");
    if (multiplicity.is_zero())
        throw InvalidArgument("progression multiplicity is identically zero");
}

Rational EigenvalueProgression::eigenvalue(const Integer& k) const {
    return Rational(sign) * (offset + Rational(k) * step);
}

namespace {

enum class MergePolicy { Reject, Merge };

// Do the eigenvalue sets of two same-sign progressions intersect? They do
// iff (a1 - a2) is an integer combination k2*h2 - k1*h1, i.e. a multiple of
// gcd(h1, h2); any intersection is automatically infinite.
bool progressions_coincide(const EigenvalueProgression& p, const EigenvalueProgression& q) {
    if (p.sign != q.sign)
        return false;
    Rational g = rational_gcd(p.step, q.step);
    return is_integer((p.offset - q.offset) / g);
}

// Does the exceptional eigenvalue lambda land on the progression? Returns
// the progression index k when it does.
std::optional<Integer> progression_hit(const EigenvalueProgression& p, const Rational& lambda) {
    if ((lambda > 0) != (p.sign > 0))
        return std::nullopt;
    Rational x = (abs_rat(lambda) - p.offset) / p.step;
    if (!is_integer(x) || x < 0)
        return std::nullopt;
    return numerator(x);
}

void add_exceptional(std::map<Rational, Integer>& excmap, const Rational& lambda,
                     const Integer& mult, MergePolicy policy) {
    if (mult == 0)
        return;
    auto [it, inserted] = excmap.emplace(lambda, mult);
    if (!inserted) {
        if (policy == MergePolicy::Reject)
            throw InvariantViolation("eigenvalue " + rational_to_string(lambda) +
                                     " represented twice in exceptional set");
        it->second += mult;
    }
}

// Merge all same-sign progressions into pairwise-disjoint ones: refine to the
// common step (the lcm), group refined progressions by offset residue, keep
// the largest offset per group, and spill the finitely many lower eigenvalues
// into the exceptional map.
std::vector<EigenvalueProgression> merge_sign_bucket(
    std::vector<EigenvalueProgression> bucket, std::map<Rational, Integer>& excmap) {
    if (bucket.empty())
        return bucket;
    const int sign = bucket.front().sign;

    Rational common = bucket.front().step;
    for (const auto& p : bucket)
        common = rational_lcm(common, p.step);

    std::vector<EigenvalueProgression> refined;
    for (const auto& p : bucket) {
        Integer stride = to_integer(common / p.step);
        if (stride > kRefinementCap)
            throw RepresentationError("progression steps require refinement by " + stride.str() +
                                      ", beyond the supported bound");
        for (Integer rem = 0; rem < stride; ++rem)
            refined.emplace_back(sign, p.offset + Rational(rem) * p.step,
                                 p.multiplicity.composed_affine(stride, rem), common);
    }

    // Group by offset residue mod the common step.
    std::map<Rational, std::vector<EigenvalueProgression>> classes;
    for (auto& p : refined) {
        Rational residue = p.offset - Rational(floor_rational(p.offset / common)) * common;
        classes[residue].push_back(std::move(p));
    }

    std::vector<EigenvalueProgression> out;
    for (auto& [residue, members] : classes) {
        Rational top = members.front().offset;
        for (const auto& p : members)
            top = std::max(top, p.offset);
        MultiplicityPolynomial total = MultiplicityPolynomial::constant(Integer(0));
        for (const auto& p : members) {
            Integer shift = to_integer((top - p.offset) / common);
            if (shift > kRefinementCap)
                throw RepresentationError("progression offsets differ by " + shift.str() +
                                          " steps, beyond the supported merge bound");
            total = total + p.multiplicity.shifted(shift);
            for (Integer k = 0; k < shift; ++k)
                add_exceptional(excmap, p.eigenvalue(k), p.multiplicity.eval_count(k),
                                MergePolicy::Merge);
        }
        out.emplace_back(sign, top, std::move(total), common);
    }
    return out;
}

struct NormalizedSpectrum {
    std::vector<EigenvalueProgression> progressions;
    std::vector<std::pair<Rational, Integer>> exceptional;
};

NormalizedSpectrum normalize_spectrum(std::vector<EigenvalueProgression> progressions,
                                      const std::vector<std::pair<Rational, Integer>>& exceptional,
                                      MergePolicy policy) {
    std::map<Rational, Integer> excmap;
    for (const auto& [lambda, mult] : exceptional) {
        if (lambda == 0)
            throw InvalidArgument("exceptional eigenvalue 0 must be stored as kernel_dim");
        if (mult <= 0)
            throw InvalidArgument("exceptional multiplicity must be positive");
        add_exceptional(excmap, lambda, mult, policy);
    }

    if (policy == MergePolicy::Reject) {
        for (size_t i = 0; i < progressions.size(); ++i)
            for (size_t j = i + 1; j < progressions.size(); ++j)
                if (progressions_coincide(progressions[i], progressions[j]))
                    throw InvariantViolation("progressions " + std::to_string(i) + " and " +
                                             std::to_string(j) + " share eigenvalues");
    } else {
        std::vector<EigenvalueProgression> plus, minus;
        for (auto& p : progressions)
            (p.sign > 0 ? plus : minus).push_back(std::move(p));
        progressions = merge_sign_bucket(std::move(plus), excmap);
        auto merged_minus = merge_sign_bucket(std::move(minus), excmap);
        progressions.insert(progressions.end(), std::make_move_iterator(merged_minus.begin()),
                            std::make_move_iterator(merged_minus.end()));
    }

    // Exceptional eigenvalues may not land on a progression. Under the merge
    // policy the progression's low end is split off into the exceptional set
    // until the conflict disappears.
    for (auto& p : progressions) {
        Integer max_hit(-1);
        for (const auto& [lambda, mult] : excmap)
            if (auto k = progression_hit(p, lambda)) {
                if (policy == MergePolicy::Reject)
                    throw InvariantViolation("eigenvalue " + rational_to_string(lambda) +
                                             " represented by both a progression and an "
                                             "exceptional entry");
                max_hit = std::max(max_hit, *k);
            }
        if (max_hit >= 0) {
            if (max_hit > kRefinementCap)
                throw RepresentationError("exceptional eigenvalue sits " + max_hit.str() +
                                          " steps into a progression, beyond the merge bound");
            for (Integer k = 0; k <= max_hit; ++k)
                add_exceptional(excmap, p.eigenvalue(k), p.multiplicity.eval_count(k),
                                MergePolicy::Merge);
            Integer cut = max_hit + 1;
            p = EigenvalueProgression(p.sign, p.offset + Rational(cut) * p.step,
                                      p.multiplicity.shifted(cut), p.step);
        }
    }

    std::sort(progressions.begin(), progressions.end(), [](const auto& a, const auto& b) {
        if (a.sign != b.sign)
            return a.sign > b.sign;
        if (a.offset != b.offset)
            return a.offset < b.offset;
        return a.step < b.step;
    });

    NormalizedSpectrum out;
    out.progressions = std::move(progressions);
    for (auto& [lambda, mult] : excmap)
        if (mult != 0)
            out.exceptional.emplace_back(lambda, mult);
    return out;
}

}  // namespace

SpectrumModel::SpectrumModel() : kernel_dim_(0) {}

SpectrumModel::SpectrumModel(std::vector<EigenvalueProgression> progressions,
                             std::vector<std::pair<Rational, Integer>> exceptional,
                             Integer kernel_dim)
    : kernel_dim_(std::move(kernel_dim)) {
    if (kernel_dim_ < 0)
        throw InvalidArgument("kernel dimension must be non-negative");
    auto normalized =
        normalize_spectrum(std::move(progressions), exceptional, MergePolicy::Reject);
    progressions_ = std::move(normalized.progressions);
    exceptional_ = std::move(normalized.exceptional);
}

SpectrumModel::SpectrumModel(merged_tag, std::vector<EigenvalueProgression> progressions,
                             std::vector<std::pair<Rational, Integer>> exceptional,
                             Integer kernel_dim)
    : kernel_dim_(std::move(kernel_dim)) {
    auto normalized = normalize_spectrum(std::move(progressions), exceptional, MergePolicy::Merge);
    progressions_ = std::move(normalized.progressions);
    exceptional_ = std::move(normalized.exceptional);
}

SpectrumModel sphere_spectrum(int n) {
    if (n < 2 || n % 2 != 0)
        throw InvalidArgument("sphere spectrum is defined for even cone dimension n >= 2, got " +
                              std::to_string(n));

    // 2^{floor((n-1)/2)} / (n-2)! * prod_{i=1}^{n-2} (k + i), expanded in k.
    std::vector<Rational> coeffs{Rational(1)};
    for (int i = 1; i <= n - 2; ++i) {
        std::vector<Rational> next(coeffs.size() + 1, Rational(0));
        for (size_t j = 0; j < coeffs.size(); ++j) {
            next[j] += coeffs[j] * i;
            next[j + 1] += coeffs[j];
        }
        coeffs = std::move(next);
    }
    Rational scale(pow(Integer(2), (n - 2) / 2), factorial(static_cast<unsigned>(n - 2)));
    for (auto& c : coeffs)
        c *= scale;

    MultiplicityPolynomial mult(std::move(coeffs));
    Rational offset(n - 1, 2);
    return SpectrumModel({EigenvalueProgression(+1, offset, mult),
                          EigenvalueProgression(-1, offset, mult)},
                         {}, Integer(0));
}

SpectrumModel scale_spectrum(const SpectrumModel& s, const Rational& c) {
    if (c <= 0)
        throw InvalidArgument("spectrum scale factor must be positive");
    std::vector<EigenvalueProgression> progressions;
    progressions.reserve(s.progressions().size());
    for (const auto& p : s.progressions())
        progressions.emplace_back(p.sign, p.offset / c, p.multiplicity, p.step / c);
    std::vector<std::pair<Rational, Integer>> exceptional;
    exceptional.reserve(s.exceptional().size());
    for (const auto& [lambda, mult] : s.exceptional())
        exceptional.emplace_back(lambda / c, mult);
    return SpectrumModel(std::move(progressions), std::move(exceptional), s.kernel_dim());
}

SpectrumModel union_spectrum(const SpectrumModel& a, const SpectrumModel& b) {
    std::vector<EigenvalueProgression> progressions = a.progressions();
    progressions.insert(progressions.end(), b.progressions().begin(), b.progressions().end());
    std::vector<std::pair<Rational, Integer>> exceptional = a.exceptional();
    exceptional.insert(exceptional.end(), b.exceptional().begin(), b.exceptional().end());
    return SpectrumModel(SpectrumModel::merged_tag{}, std::move(progressions),
                         std::move(exceptional), a.kernel_dim() + b.kernel_dim());
}

std::string progression_to_string(const EigenvalueProgression& p) {
    std::string s(p.sign > 0 ? "+(" : "-(");
    s += rational_to_string(p.offset);
    s += " + k";
    if (p.step != 1) {
        s += '*';
        s += rational_to_string(p.step);
    }
    s += ')';
    return s;
}

namespace {

// Yields (eigenvalue, multiplicity) for every spectrum member inside the
// interval, in no particular order. Throws when the walk would be infinite
// or longer than cap.
template <typename F>
void for_each_in_interval(const SpectrumModel& s, const Interval& interval, long long cap,
                          F&& emit) {
    if (interval.is_empty())
        return;

    for (const auto& p : s.progressions()) {
        // Reduce to the positive half-line value u = offset + k*step: for
        // negative progressions the interval is reflected.
        std::optional<Rational> lo_u, hi_u;
        bool lo_closed = false, hi_closed = false;
        if (p.sign > 0) {
            lo_u = interval.lower();
            lo_closed = interval.lower_closed();
            hi_u = interval.upper();
            hi_closed = interval.upper_closed();
        } else {
            if (interval.upper()) {
                lo_u = -*interval.upper();
                lo_closed = interval.upper_closed();
            }
            if (interval.lower()) {
                hi_u = -*interval.lower();
                hi_closed = interval.lower_closed();
            }
        }

        if (!hi_u)
            throw InfiniteCountError("interval " + interval.to_string() +
                                     " contains an entire progression tail");

        Integer k_min(0);
        if (lo_u) {
            Rational x = (*lo_u - p.offset) / p.step;
            Integer bound = lo_closed ? ceil_rational(x) : floor_rational(x) + 1;
            k_min = std::max(k_min, bound);
        }
        Rational x_hi = (*hi_u - p.offset) / p.step;
        Integer k_max = hi_closed ? floor_rational(x_hi) : ceil_rational(x_hi) - 1;
        if (k_max < k_min)
            continue;
        if (k_max > cap)
            throw EnumerationLimitError("progression walk to k = " + k_max.str() +
                                        " exceeds the enumeration cap " + std::to_string(cap));
        for (Integer k = k_min; k <= k_max; ++k) {
            Integer mult = p.multiplicity.eval_count(k);
            if (mult != 0)
                emit(p.eigenvalue(k), mult);
        }
    }

    for (const auto& [lambda, mult] : s.exceptional())
        if (interval.contains(lambda))
            emit(lambda, mult);

    if (s.kernel_dim() != 0 && interval.contains(Rational(0)))
        emit(Rational(0), s.kernel_dim());
}

}  // namespace

Integer count_eigs(const SpectrumModel& s, const Interval& interval, long long cap) {
    Integer total(0);
    for_each_in_interval(s, interval, cap,
                         [&](const Rational&, const Integer& mult) { total += mult; });
    return total;
}

std::vector<std::pair<Rational, Integer>> enumerate_eigs(const SpectrumModel& s,
                                                         const Interval& interval, long long cap) {
    std::vector<std::pair<Rational, Integer>> out;
    for_each_in_interval(s, interval, cap, [&](const Rational& lambda, const Integer& mult) {
        out.emplace_back(lambda, mult);
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace coneindex

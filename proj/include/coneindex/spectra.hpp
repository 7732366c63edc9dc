#pragma once

#include "coneindex/interval.hpp"
#include "coneindex/rational.hpp"

#include <utility>
#include <vector>

namespace coneindex {

// Progression walks refuse to go past this many terms rather than silently
// truncating a count.
inline constexpr long long kDefaultEnumerationCap = 1'000'000;

// Sampling range for the non-negative-integer-value check on multiplicity
// polynomials. Integrality on 0..64 is conclusive for degrees up to 63;
// non-negativity beyond the sampled range additionally needs a positive
// leading coefficient, which is checked exactly.
inline constexpr unsigned kMultiplicityCheckRange = 64;

// Polynomial m(k) giving the multiplicity of the k-th progression member.
class MultiplicityPolynomial {
public:
    // coefficients[j] multiplies k^j. Validates the integrality/positivity
    // invariant on construction.
    explicit MultiplicityPolynomial(std::vector<Rational> coefficients);

    static MultiplicityPolynomial constant(const Integer& value);

    const std::vector<Rational>& coefficients() const { return coefficients_; }
    bool is_zero() const { return coefficients_.empty(); }
    unsigned degree() const;

    Rational eval(const Rational& k) const;
    // Evaluation at integer k with the invariant enforced: the value must be
    // a non-negative integer.
    Integer eval_count(const Integer& k) const;

    // m(k + shift) for integer shift >= 0.
    MultiplicityPolynomial shifted(const Integer& shift) const;
    // m(stride*k + rem): the multiplicity pattern of a residue class.
    MultiplicityPolynomial composed_affine(const Integer& stride, const Integer& rem) const;

    MultiplicityPolynomial operator+(const MultiplicityPolynomial& other) const;
    bool operator==(const MultiplicityPolynomial& other) const = default;

private:
    std::vector<Rational> coefficients_;  // trailing zeros trimmed
};

// Eigenvalues sign*(offset + k*step), k = 0, 1, 2, ... with multiplicity
// m(k). step defaults to 1; rescaled spectra use other steps.
struct EigenvalueProgression {
    EigenvalueProgression(int sign, Rational offset, MultiplicityPolynomial multiplicity,
                          Rational step = Rational(1));

    Rational eigenvalue(const Integer& k) const;

    int sign;
    Rational offset;       // > 0; eigenvalue 0 lives in kernel_dim
    Rational step;         // > 0
    MultiplicityPolynomial multiplicity;

    bool operator==(const EigenvalueProgression& other) const = default;
};

// A boundary Dirac spectrum: arithmetic progressions with polynomial
// multiplicities, finitely many exceptional eigenvalues, and the kernel
// dimension kept separately. Immutable after construction; construction
// rejects any eigenvalue represented twice.
class SpectrumModel {
public:
    SpectrumModel();

    SpectrumModel(std::vector<EigenvalueProgression> progressions,
                  std::vector<std::pair<Rational, Integer>> exceptional,
                  Integer kernel_dim);

    const std::vector<EigenvalueProgression>& progressions() const { return progressions_; }
    const std::vector<std::pair<Rational, Integer>>& exceptional() const { return exceptional_; }
    const Integer& kernel_dim() const { return kernel_dim_; }

    bool operator==(const SpectrumModel& other) const = default;

private:
    friend SpectrumModel union_spectrum(const SpectrumModel&, const SpectrumModel&);

    struct merged_tag {};
    SpectrumModel(merged_tag, std::vector<EigenvalueProgression> progressions,
                  std::vector<std::pair<Rational, Integer>> exceptional, Integer kernel_dim);

    std::vector<EigenvalueProgression> progressions_;
    std::vector<std::pair<Rational, Integer>> exceptional_;  // sorted, nonzero eigenvalues
    Integer kernel_dim_;
};

// Spectrum of the Dirac operator on the round sphere S^{n-1} bounding an
// n-dimensional cone (n even): eigenvalues +-((n-1)/2 + k) with multiplicity
// 2^{floor((n-1)/2)} * C(k+n-2, k). For n = 2 this degenerates to the
// bounding circle spectrum +-(1/2 + k) with multiplicity 1; the circle value
// is the n = 2 evaluation of the same formula, not an independently given
// datum.
SpectrumModel sphere_spectrum(int n);

// Rescales the boundary metric: every eigenvalue maps to lambda/c, c > 0.
SpectrumModel scale_spectrum(const SpectrumModel& s, const Rational& c);

// Multiset union (disjoint boundary components); coinciding eigenvalues
// merge by adding multiplicities, kernel dimensions add.
SpectrumModel union_spectrum(const SpectrumModel& a, const SpectrumModel& b);

// "+(3/2 + k)" / "-(1/4 + k*1/2)"
std::string progression_to_string(const EigenvalueProgression& p);

// N(I): total multiplicity of eigenvalues in I. Rejects intervals containing
// an entire progression tail (InfiniteCountError) and walks longer than cap
// (EnumerationLimitError).
Integer count_eigs(const SpectrumModel& s, const Interval& interval,
                   long long cap = kDefaultEnumerationCap);

// Sorted (eigenvalue, multiplicity) list of the spectrum inside I; zero
// multiplicities are dropped. Same finiteness conditions as count_eigs.
std::vector<std::pair<Rational, Integer>> enumerate_eigs(const SpectrumModel& s,
                                                         const Interval& interval,
                                                         long long cap = kDefaultEnumerationCap);

}  // namespace coneindex

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace sympform {

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return double(num) / double(den); }
};

/// Reduce to lowest terms, den > 0.
Rational normalized(Rational r);

/// The rational with the smallest denominator in [lo, hi] (ties broken
/// towards small |numerator|), by the continued-fraction bisection walk.
Rational simplest_in_interval(double lo, double hi);

/// Exact small-denominator detection: returns p/q with q <= max_den whose
/// double value reproduces x bit-for-bit, if one exists. A double like 1.5
/// is detected; an irrational rounded to double is not (its reduced
/// denominator is a large power of two).
std::optional<Rational> detect_rational(double x, long long max_den = 1'000'000);

/// One term of a conical rational decomposition: coefficient * integral class.
struct DecomposeTerm {
    double coefficient;                // >= 0
    std::array<long long, 3> klass;    // integral class, coords in B2
};

/// Writes h (degree-2 class, B2 coordinates) as a nonnegative combination of
/// integral classes, each pairing positively with alpha:
///     h = sum a_i h_i,  a_i >= 0,  h_i . alpha > 0.
/// Requires h . alpha > 0. Rational h yields a single term; otherwise each
/// irrational coordinate is peeled off against a basis vector of positive
/// pairing, keeping at least half the current pairing at every step.
std::vector<DecomposeTerm> rational_decompose(const std::array<double, 3>& h,
                                              const std::array<double, 3>& alpha);

}  // namespace sympform

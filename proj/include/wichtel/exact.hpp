#pragma once

#include <gmpxx.h>

#include <string>

namespace wichtel {

/// Arbitrary-precision nonnegative integer. Every exported count is one of
/// these; factorial growth rules out fixed-width types almost immediately
/// (20! already exceeds 2^61).
using ExactCount = mpz_class;

/// Arbitrary-precision signed integer, used for intermediate alternating
/// sums. Exported counts are always nonnegative.
using SignedExactCount = mpz_class;

/// Exact rational number, kept in lowest terms with positive denominator.
using ExactRatio = mpq_class;

/// Nearest-even correctly rounded conversion to double.
double to_double(const ExactRatio& q);

/// Reduces q and asserts the denominator is 1; returns the numerator.
/// Throws InvariantViolation otherwise.
ExactCount to_integer(const ExactRatio& q);

std::string count_to_string(const ExactCount& c);

/// "num/den" in lowest terms, denominator always printed ("3/53", "1/1").
std::string ratio_to_string(const ExactRatio& q);

ExactCount count_from_string(const std::string& s);
ExactRatio ratio_from_string(const std::string& s);

}  // namespace wichtel

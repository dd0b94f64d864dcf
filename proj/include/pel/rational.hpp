#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pel {

/// Arbitrary-precision integer and rational scalars (GMP).
///
/// mpq_class values produced by arithmetic are always canonical: the
/// denominator is positive and coprime to the numerator, zero is 0/1.
using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);
BigRational make_rational(long num, long den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
BigRational parse_rational(std::string_view text);

/// base^e for e >= 0.
BigRational pow(const BigRational& base, unsigned e);

/// 2^e as a rational, e may be negative.
BigRational pow2(int e);

}  // namespace pel

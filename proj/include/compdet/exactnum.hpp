#pragma once

// Exact scalars. Integer and Rational are GMP values; gmpxx keeps mpq_class
// canonical (positive denominator, reduced, zero as 0/1) after every
// arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace compdet {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws ParameterError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// "p/q" when the denominator is not 1, "p" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer factorial(std::uint64_t m);

/// Set-counting binomial: C(m, r) for 0 <= r <= m, zero otherwise.
/// Only used for exponents and counts, never for matrix entries.
Integer counting_binomial(std::int64_t m, std::int64_t r);

/// Number of compositions of m into p non-negative parts. Equals
/// counting_binomial(m + p - 1, p - 1) for p >= 1; for p == 0 it is 1 when
/// m == 0 (the empty composition) and 0 otherwise.
Integer composition_count(std::int64_t m, std::int64_t p);

/// Narrowing conversion for exponents; throws ParameterError if it does not fit.
std::uint64_t to_u64(const Integer& value);

Rational pow(const Rational& base, std::uint64_t exponent);
Integer pow(const Integer& base, std::uint64_t exponent);

}  // namespace compdet

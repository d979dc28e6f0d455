#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace loopblocks {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Reduced "p/q" form; integers print without a denominator.
std::string rational_to_string(const Rational& q);

/// Accepts "p", "p/q" and "-p/q". Throws DomainError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Floor of a rational as a machine integer.
std::int64_t floor_to_int(const Rational& q);

/// Numerator as int64 when the value is integral; throws std::logic_error otherwise.
std::int64_t to_int_checked(const Rational& q);

std::int64_t lcm_int(std::int64_t a, std::int64_t b);

} // namespace loopblocks

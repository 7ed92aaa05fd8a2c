#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace vermakit {

/// Exact rational scalar. Always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

/// "3/2", "-1", "0".
std::string to_string(const Rational& r);

/// Accepts "3", "-3", "3/2", "-3/2" with optional surrounding whitespace.
/// Throws InputError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

/// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace vermakit

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace qcn {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "3", "-2/5", "0.95" exactly. Throws qcn::Error on malformed input.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals ("0.5,1/3,0").
std::vector<Rational> parse_rational_list(std::string_view text);

/// Decimal rendering rounded half-to-even at `digits` fractional digits.
std::string to_decimal(const Rational& value, int digits);

/// Rounds half-to-even to `digits` fractional digits, keeping the result exact.
Rational round_half_even(const Rational& value, int digits);

std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Least common multiple of the denominators of `values` (lowest terms).
BigInt denominator_lcm(std::span<const Rational> values);

}  // namespace qcn

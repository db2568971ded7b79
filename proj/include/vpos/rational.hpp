#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace vpos {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Parses "7", "-3/2", "+4/6" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "3", "-3/2".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);
/// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
/// GMP arithmetic assumes reduced operands. Throws on a zero denominator.
Rational fraction(const Integer& num, const Integer& den);

Integer binomial(long n, long k);
Integer factorial(long n);

Vector zero_vector(std::size_t n);
Rational dot(const Vector& a, const Vector& b);

}  // namespace vpos

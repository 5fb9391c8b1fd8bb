#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ahull {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when q == 1.
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Accepts "p", "-p" and "p/q". Throws std::invalid_argument on malformed text.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

Integer ipow(const Integer& base, unsigned long exponent);
Integer isqrt(const Integer& x);

/// Remainder in [0, |m|).
Integer mod(const Integer& a, const Integer& m);
Integer floor_div(const Integer& a, const Integer& b);
/// Nearest integer to a/b (b > 0), ties rounded up.
Integer round_div(const Integer& a, const Integer& b);

/// Natural logarithm of |x|; x must be nonzero.
double log_abs(const Integer& x);

Integer lcm(const Integer& a, const Integer& b);
Integer factorial(unsigned long n);

bool is_probable_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);

}  // namespace ahull

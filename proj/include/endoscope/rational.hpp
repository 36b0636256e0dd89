#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace endoscope {

using Integer = mpz_class;
using Rational = mpq_class;  // gmpxx keeps results canonical: gcd(num, den) = 1, den > 0

Rational make_rational(const Integer& num, const Integer& den);

/* Parses "n", "-n", "n/d" (whitespace tolerated around the parts). */
Rational parse_rational(std::string_view text);

/* Always "num/den", including den = 1. */
std::string to_fraction_string(const Rational& q);

/* "num" when den = 1, "num/den" otherwise; for human-readable output. */
std::string to_display_string(const Rational& q);

bool is_integer(const Rational& q);

Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, long exp);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/* Exact floor(sqrt(n)) test: returns true and writes the root when n is a perfect square. */
bool perfect_square(const Integer& n, Integer* root = nullptr);
bool perfect_square(const Rational& q, Rational* root = nullptr);

}  // namespace endoscope

#pragma once

#include <gmpxx.h>

#include <string>

namespace polygrade {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p" or "p/q" (base 10, q != 0) into a canonical rational.
// Throws std::invalid_argument on malformed text or a zero denominator.
Rat rat_parse(const std::string& text);

// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& q);

// Exact power with integer exponent; a negative exponent inverts and
// requires base != 0 (std::domain_error otherwise).
Rat rat_pow(const Rat& base, long exp);

// Exact integer power.
Int int_pow(const Int& base, unsigned long exp);

// True iff q has denominator 1.
bool rat_is_integral(const Rat& q);

}  // namespace polygrade

#pragma once

#include <gmpxx.h>

#include <string>

namespace apolar {

// Exact arithmetic throughout: Rat is an arbitrary-precision rational,
// kept in lowest terms with positive denominator by GMP canonicalization.
using Rat = mpq_class;
using Int = mpz_class;

Int factorial(unsigned n);

// binom(n, k) with the usual convention binom(n, k) = 0 for k > n.
Int binomial(unsigned n, unsigned k);

Rat rat_pow(const Rat& base, unsigned exp);

// Renders "p" for integers and "p/q" otherwise, lowest terms.
std::string rat_to_string(const Rat& q);

// Accepts an optionally signed integer or fraction "p/q", q != 0.
// Throws parse_error on anything else.
Rat rat_from_string(const std::string& text);

} // namespace apolar

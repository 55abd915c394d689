#pragma once
/* Exact scalar arithmetic: arbitrary precision integers and rationals. */

#include <gmpxx.h>

#include <optional>
#include <string>

namespace gammaflow {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

std::string bigint_to_string(const BigInt& v);

/* Strict signed decimal: optional '-', no leading zeros, no "-0", no signs
 * other than a leading minus. Throws std::invalid_argument otherwise. */
BigInt bigint_from_string(const std::string& text);

/* "p" when the denominator is 1, else "p/q" in lowest terms, q > 0. */
std::string rational_to_string(const Rational& v);

/* Accepts the output of rational_to_string plus unreduced forms like "4/6".
 * Throws std::invalid_argument on malformed input or zero denominator. */
Rational rational_from_string(const std::string& text);

Rational make_rational(const BigInt& num, const BigInt& den);

int sign(const Rational& v);

/* Exact square root over the rationals: empty when v is negative or not a
 * perfect square of a rational. */
std::optional<Rational> exact_sqrt(const Rational& v);

}

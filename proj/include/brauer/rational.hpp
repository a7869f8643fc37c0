#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace brauer {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms; mpq_class does not canonicalize on construction.
inline Rational make_rational(const Integer &n, const Integer &d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer &value);
std::string to_string(const Rational &value);

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// p-adic valuation of a nonzero integer.
long valuation(const Integer &value, const Integer &p);

/// p-adic valuation of a nonzero rational.
long valuation(const Rational &value, const Integer &p);

/// Signed squarefree integer d with value = d * (rational square).
Integer squarefree_part(const Rational &value);

/// Trial-division factorization of |n| (n != 0) as (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned long>> factorize(const Integer &n);

bool is_prime(long n);
bool is_rational_square(const Rational &value);

} // namespace brauer

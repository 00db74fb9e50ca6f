#pragma once

#include <gmpxx.h>

#include <string>

namespace fid {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// n! / (parts_1! parts_2! ...). Caller guarantees the parts sum to n.
template <class Range>
BigInt multinomial(unsigned long n, const Range& parts) {
  BigInt r = factorial(n);
  for (auto p : parts) r /= factorial(static_cast<unsigned long>(p));
  return r;
}

BigInt power(unsigned long base, unsigned long exp);

/// num/den in canonical form.
Rational ratio(const BigInt& num, const BigInt& den);

/// Rational rendered as "p/q" (denominator always present).
std::string to_fraction_string(const Rational& q);

}  // namespace fid

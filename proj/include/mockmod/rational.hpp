#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>

namespace mockmod {

// Exact rational coefficients.  GMP's mpq_class already maintains the
// canonical form we need: gcd(num, den) = 1 and den > 0.
using Rat = mpq_class;

// ord_p(0) is +infinity; represented by this sentinel.
inline constexpr long kOrdInfinity = std::numeric_limits<long>::max();

// p-adic valuation of an integer / rational.  p must be >= 2 (it is not
// required to be prime here, but every caller in this library passes one).
long ord_p(const mpz_class& n, long p);
long ord_p(const Rat& x, long p);

// p^e as an arbitrary-precision integer, e >= 0.
mpz_class pow_z(long p, unsigned long e);

// Deterministic primality for the small odd primes this library accepts.
bool is_small_prime(long p);

// Text encoding "num/den" with "/den" omitted when den == 1.
std::string encode_rat(const Rat& x);
Rat decode_rat(const std::string& text);

} // namespace mockmod

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <string>

namespace motint {

using Integer = mpz_class;
using Rational = mpq_class;

/// Set of primes, ordered. Used for bad-prime certificates.
using PrimeSet = std::set<Integer>;

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Distinct prime divisors of |n|. Empty for n in {0, 1, -1}.
PrimeSet prime_factors(const Integer& n);

/// Adds the prime divisors of numerator and denominator of `x` to `out`.
void add_prime_factors(const Rational& x, PrimeSet& out);

/// Writes q = p^e with p prime and e >= 1. Returns false when q is not a prime power.
bool split_prime_power(std::uint64_t q, std::uint64_t& p, unsigned& e);

Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, long exp);

/// "a/b" in lowest terms, b > 0 (also for integers: "3/1").
std::string to_fraction_string(const Rational& x);
/// Accepts "a/b" or "a".
Rational parse_fraction(const std::string& text);

std::int64_t to_int64(const Integer& n);

}  // namespace motint

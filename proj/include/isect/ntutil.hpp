#pragma once

#include <utility>
#include <vector>

#include "isect/linalg.hpp"

namespace isect {

std::vector<long> primes_upto(long n);

/// Deterministic trial division; intended for desk-scale operands.
bool is_prime(const Int& n);

/// Trial-division factorization of n >= 1 into (prime, exponent) pairs.
std::vector<std::pair<Int, int>> factorize(Int n);

/// All prime powers p^e <= bound, ascending.
std::vector<Int> prime_powers_upto(const Int& bound);

/// q-adic valuation of v != 0.
int valuation(Int v, const Int& q);

Int powmod(const Int& base, const Int& exp, const Int& mod);

/// Legendre symbol (a|p) for an odd prime p.
int legendre(const Int& a, const Int& p);

}  // namespace isect

#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace stick {

/// Miller-Rabin with the first 13 prime bases, which is a proof of primality
/// below 3.317e24. Larger inputs fall back to GMP's BPSW-based test.
bool is_prime(const mpz_class& n);

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
/// Trial division by small primes, then Brent's variant of Pollard rho.
std::vector<std::pair<mpz_class, long>> factor_integer(const mpz_class& n);

}  // namespace stick

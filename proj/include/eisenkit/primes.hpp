#ifndef EISENKIT_PRIMES_HPP
#define EISENKIT_PRIMES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "eisenkit/rational.hpp"

namespace eisenkit {

// Segmented sieve of Eratosthenes.
std::vector<uint64_t> primes_up_to(uint64_t bound);

// Deterministic Miller-Rabin below 2^64; BPSW-style probable-prime test
// (mpz_probab_prime_p) above.
bool is_prime(const Integer& n);

// Sorted (prime, exponent) factorization of |n|, n != 0, via trial division
// followed by Brent-cycle Pollard rho with a deterministic retry schedule.
std::vector<std::pair<Integer, int>> factor(const Integer& n);

// EISENKIT_PRIME_BOUND, default 10^6.
uint64_t prime_bound_from_env();

}  // namespace eisenkit

#endif

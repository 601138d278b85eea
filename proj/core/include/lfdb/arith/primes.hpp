#pragma once

#include <cstdint>
#include <vector>

#include "lfdb/arith/integer.hpp"

namespace lfdb::arith {

/// All primes p <= limit in ascending order (empty when limit < 2).
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// spf[n] = smallest prime factor of n for 2 <= n <= limit; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Exact for n < 2^64, otherwise probabilistic with a fixed number of rounds.
bool is_probable_prime(const Integer& n);

}  // namespace lfdb::arith

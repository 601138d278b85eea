#pragma once

#include <cstdint>
#include <vector>

#include "lfdb/arith/integer.hpp"

namespace lfdb::arith {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  Integer n;
  std::vector<PrimePower> factors;  // primes strictly increasing

  Integer product() const;
};

/// Trial division followed by Pollard-Brent rho. Throws DomainError for n <= 0.
Factorization factorize(const Integer& n);

struct SmallPrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const SmallPrimePower&, const SmallPrimePower&) = default;
};

std::vector<SmallPrimePower> factor_u64(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
int moebius(std::uint64_t n);

}  // namespace lfdb::arith

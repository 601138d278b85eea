#include "lfdb/arith/primes.hpp"

#include <array>

#include "lfdb/arith/modular.hpp"

namespace lfdb::arith {

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  // odd-only sieve: index i stands for 2i + 1
  const std::uint64_t half = limit / 2 + 1;
  std::vector<bool> composite(half, false);
  primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i) {
    const std::uint64_t p = 2 * i + 1;
    if (p > limit) break;
    if (composite[i]) continue;
    primes.push_back(p);
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[m / 2] = true;
  }
  return primes;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t m = i; m <= limit; m += i) {
      if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned r) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // these bases are deterministic below 3.3e24
  for (auto a : kSmall) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

bool is_probable_prime(const Integer& n) {
  if (sgn(n) <= 0) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return is_prime(mpz_get_ui(n.get_mpz_t()));
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

}  // namespace lfdb::arith

#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "lfdb/arith/primes.hpp"
#include "lfdb/error.hpp"

namespace lfdb::lfunc {

/// Local factor P_p(t) = 1 + c_1 t + ... + c_d t^d, coefficients low degree first.
template <class Ring>
struct EulerFactor {
  std::uint64_t prime = 0;
  std::vector<Ring> coefficients;

  std::size_t degree_at_p() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// First max_power + 1 coefficients of the power series 1 / P(t).
template <class Ring>
std::vector<Ring> inverse_series(const EulerFactor<Ring>& factor, unsigned max_power) {
  if (factor.coefficients.empty()) throw DomainError("empty Euler factor");
  const Ring one = factor.coefficients[0];
  const Ring zero = one - one;
  std::vector<Ring> b(max_power + 1, zero);
  b[0] = one;
  for (unsigned k = 1; k <= max_power; ++k) {
    Ring acc = zero;
    for (unsigned j = 1; j <= k && j < factor.coefficients.size(); ++j) {
      acc = acc + factor.coefficients[j] * b[k - j];
    }
    b[k] = zero - acc;
  }
  return b;
}

/// Dirichlet coefficients a_0..a_X of prod_p 1/P_p(p^{-s}); a_0 is a zero placeholder.
/// Every prime p <= X needs a factor, otherwise DomainError.
template <class Ring>
std::vector<Ring> dirichlet_from_euler(const std::map<std::uint64_t, EulerFactor<Ring>>& factors,
                                       std::uint64_t bound) {
  if (bound == 0) throw DomainError("coefficient bound must be positive");
  if (bound > std::numeric_limits<std::uint32_t>::max()) throw DomainError("coefficient bound too large");
  if (factors.empty()) throw DomainError("no Euler factors supplied");
  const Ring one = factors.begin()->second.coefficients.at(0);
  const Ring zero = one - one;

  std::map<std::uint64_t, std::vector<Ring>> local;
  for (const auto p : arith::sieve_primes(bound)) {
    const auto it = factors.find(p);
    if (it == factors.end()) throw DomainError("missing Euler factor at p = " + std::to_string(p));
    unsigned k = 0;
    for (std::uint64_t pk = p; pk <= bound / p; pk *= p) ++k;
    local.emplace(p, inverse_series(it->second, k + 1));
  }

  const auto spf = arith::smallest_prime_factors(static_cast<std::uint32_t>(bound));
  std::vector<Ring> a(bound + 1, zero);
  a[1] = one;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    const std::uint64_t p = spf[n];
    std::uint64_t m = n;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    a[n] = local.at(p)[e] * a[m];
  }
  return a;
}

}  // namespace lfdb::lfunc

#include "lfdb/arith/factor.hpp"

#include <algorithm>
#include <map>

#include "lfdb/arith/primes.hpp"
#include "lfdb/error.hpp"

namespace lfdb::arith {

Integer Factorization::product() const {
  Integer result = 1;
  for (const auto& pp : factors) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    result *= power;
  }
  return result;
}

namespace {

constexpr unsigned long kTrialLimit = 10000;

// Brent's variant of Pollard rho; n is odd, composite and has no factor below kTrialLimit.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  const Integer d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

Factorization factorize(const Integer& n) {
  if (sgn(n) <= 0) throw DomainError("factorize: n must be positive, got " + n.get_str());
  Factorization result{n, {}};
  Integer rest = n;
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) found[Integer(p)] = e;
  }
  if (rest != 1) split(rest, found);
  for (auto& [p, e] : found) result.factors.push_back({p, e});
  return result;
}

std::vector<SmallPrimePower> factor_u64(std::uint64_t n) {
  if (n == 0) throw DomainError("factor_u64: n must be positive");
  std::vector<SmallPrimePower> out;
  if (n >= (std::uint64_t{1} << 40)) {
    for (const auto& pp : factorize(from_uint64(n)).factors) {
      out.push_back({to_uint64(pp.prime), pp.exponent});
    }
    return out;
  }
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factor_u64(n)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : factor_u64(n)) {
    const std::size_t count = divs.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int moebius(std::uint64_t n) {
  int mu = 1;
  for (const auto& [p, e] : factor_u64(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

}  // namespace lfdb::arith

#pragma once

// Slow, independent reference computations. Nothing here calls into lfdb.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline bool is_prime_td(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_td(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    bool prime = true;
    for (const auto p : out) {
      if (p * p > n) break;
      if (n % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factor_td(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= n; ++a) {
    if (std::gcd(a, n) == 1) ++count;
  }
  return count;
}

inline int mobius(std::uint64_t n) {
  int sign = 1;
  for (const auto& [p, e] : factor_td(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

/// Primitive characters mod N: sum over d | N of mu(d) phi(N / d).
inline std::uint64_t primitive_count(std::uint64_t n) {
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) total += mobius(d) * static_cast<std::int64_t>(phi(n / d));
  }
  return static_cast<std::uint64_t>(total);
}

/// Character as a table n mod N -> exponent k of e^{2 pi i k / E}, or -1 off the units.
using CharTable = std::vector<std::int64_t>;

/// Every homomorphism (Z/N)* -> mu_E, found by assigning values to a greedily chosen
/// generating set and propagating through the Cayley graph; inconsistent assignments drop.
inline std::set<CharTable> all_characters(std::uint64_t N, std::uint64_t E) {
  std::vector<std::uint64_t> units;
  for (std::uint64_t a = 1; a <= N; ++a) {
    if (std::gcd(a, N) == 1) units.push_back(a % N);
  }
  if (N == 1) units = {0};
  auto closure = [&](const std::vector<std::uint64_t>& gens) {
    std::set<std::uint64_t> seen{1 % N};
    std::vector<std::uint64_t> frontier{1 % N};
    while (!frontier.empty()) {
      const auto x = frontier.back();
      frontier.pop_back();
      for (const auto g : gens) {
        const auto y = (x * g) % N;
        if (seen.insert(y).second) frontier.push_back(y);
      }
    }
    return seen;
  };
  std::vector<std::uint64_t> gens;
  while (closure(gens).size() < units.size()) {
    const auto span = closure(gens);
    for (const auto u : units) {
      if (!span.count(u)) {
        gens.push_back(u);
        break;
      }
    }
  }
  std::set<CharTable> out;
  std::vector<std::uint64_t> assign(gens.size(), 0);
  while (true) {
    CharTable table(N, -1);
    table[1 % N] = 0;
    std::vector<std::uint64_t> frontier{1 % N};
    bool ok = true;
    while (ok && !frontier.empty()) {
      const auto x = frontier.back();
      frontier.pop_back();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto y = (x * gens[i]) % N;
        const auto v = static_cast<std::int64_t>((table[x] + assign[i]) % E);
        if (table[y] < 0) {
          table[y] = v;
          frontier.push_back(y);
        } else if (table[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.insert(table);
    std::size_t i = 0;
    while (i < assign.size() && ++assign[i] == E) assign[i++] = 0;
    if (i == assign.size()) break;
  }
  return out;
}

/// Kronecker symbol (D / p) for a prime p, from residues and the mod-8 rule at 2.
inline int kronecker_prime(std::int64_t D, std::uint64_t p) {
  if (p == 2) {
    if (D % 2 == 0) return 0;
    const auto r = ((D % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const auto d = static_cast<std::uint64_t>(((D % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                            static_cast<std::int64_t>(p));
  if (d == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (x * x % p == d) return 1;
  }
  return -1;
}

/// Affine solutions counted pair by pair, plus the point at infinity.
inline std::uint64_t point_count_naive(const std::array<std::int64_t, 5>& a, std::uint64_t p) {
  const auto P = static_cast<std::int64_t>(p);
  auto m = [P](std::int64_t v) { return ((v % P) + P) % P; };
  const std::int64_t a1 = m(a[0]), a2 = m(a[1]), a3 = m(a[2]), a4 = m(a[3]), a6 = m(a[4]);
  std::uint64_t count = 1;
  for (std::int64_t x = 0; x < P; ++x) {
    const std::int64_t rhs = m(m(m(x * x) * x) + m(a2 * m(x * x)) + m(a4 * x) + a6);
    for (std::int64_t y = 0; y < P; ++y) {
      if (m(m(y * y) + m(a1 * m(x * y)) + m(a3 * y)) == rhs) ++count;
    }
  }
  return count;
}

/// Same count in O(p): for odd p, y^2 + b y = c has 1 + ((b^2 + 4c) / p) solutions,
/// with the squares mod p tabulated once.
inline std::uint64_t point_count_squares(const std::array<std::int64_t, 5>& a, std::uint64_t p) {
  if (p == 2) return point_count_naive(a, p);
  const auto P = static_cast<std::int64_t>(p);
  auto m = [P](std::int64_t v) { return ((v % P) + P) % P; };
  std::vector<int> legendre(p, -1);
  legendre[0] = 0;
  for (std::int64_t y = 1; y < P; ++y) legendre[static_cast<std::size_t>(y * y % P)] = 1;
  const std::int64_t a1 = m(a[0]), a2 = m(a[1]), a3 = m(a[2]), a4 = m(a[3]), a6 = m(a[4]);
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < P; ++x) {
    const std::int64_t rhs = m(m(m(x * x) * x) + m(a2 * m(x * x)) + m(a4 * x) + a6);
    const std::int64_t b = m(a1 * x + a3);
    count += 1 + legendre[static_cast<std::size_t>(m(b * b + 4 * rhs))];
  }
  return static_cast<std::uint64_t>(count);
}

/// a_1..a_X from a_p by a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}} at good p, a_p^k at bad p.
inline std::vector<std::int64_t> expand_degree2(const std::map<std::uint64_t, std::int64_t>& ap,
                                                std::uint64_t conductor, std::uint64_t X) {
  std::vector<std::int64_t> a(X + 1, 0);
  a[1] = 1;
  for (std::uint64_t n = 2; n <= X; ++n) {
    std::int64_t value = 1;
    for (const auto& [p, e] : factor_td(n)) {
      const auto P = static_cast<std::int64_t>(p);
      const bool bad = conductor % p == 0;
      std::int64_t prev = 1, cur = ap.at(p);
      for (unsigned k = 1; k < e; ++k) {
        const std::int64_t next = bad ? cur * ap.at(p) : ap.at(p) * cur - P * prev;
        prev = cur;
        cur = next;
      }
      value *= cur;
    }
    a[n] = value;
  }
  return a;
}

/// a_n for a completely multiplicative real character given its values at primes.
inline std::vector<std::int64_t> expand_degree1(const std::map<std::uint64_t, int>& chi_p, std::uint64_t X) {
  std::vector<std::int64_t> a(X + 1, 0);
  a[1] = 1;
  for (std::uint64_t n = 2; n <= X; ++n) {
    std::int64_t value = 1;
    for (const auto& [p, e] : factor_td(n)) {
      for (unsigned k = 0; k < e; ++k) value *= chi_p.at(p);
    }
    a[n] = value;
  }
  return a;
}

/// Ideals of norm n in Z[i]: #{(a, b) in Z^2 : a^2 + b^2 = n} / 4.
inline std::vector<std::int64_t> gaussian_ideal_counts(std::uint64_t X) {
  std::vector<std::int64_t> reps(X + 1, 0);
  const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(X))) + 1;
  for (std::int64_t a = -r; a <= r; ++a) {
    for (std::int64_t b = -r; b <= r; ++b) {
      const auto n = static_cast<std::uint64_t>(a * a + b * b);
      if (n >= 1 && n <= X) ++reps[n];
    }
  }
  for (auto& c : reps) c /= 4;
  return reps;
}

struct Bounded {
  double value = 0.0;
  double error = 0.0;
};

/// zeta(2) = sum_{n <= M} n^-2 + tail, with 1/(M+1) < tail < 1/M.
inline Bounded zeta2(std::uint64_t M) {
  double s = 0.0;
  for (std::uint64_t n = M; n >= 1; --n) s += 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  const double lo = 1.0 / static_cast<double>(M + 1), hi = 1.0 / static_cast<double>(M);
  return {s + (lo + hi) / 2, (hi - lo) / 2 + 1e-15};
}

/// 1 - 1/3 + 1/5 - ...: the mean of two consecutive partial sums is within (b_K - b_{K+1}) / 2.
inline Bounded leibniz(std::uint64_t K) {
  double s = 0.0;
  for (std::uint64_t k = K; k-- > 0;) s += (k % 2 ? -1.0 : 1.0) / static_cast<double>(2 * k + 1);
  const double bK = 1.0 / static_cast<double>(2 * K + 1);
  const double next = s + (K % 2 ? -bK : bK);
  const double b1 = 1.0 / static_cast<double>(2 * K + 3);
  return {(s + next) / 2, (bK - b1) / 2 + 1e-15};
}

/// sum_{n >= 0} (n + x)^{-s} for Re s >= 2, summed directly to M with an integral tail.
inline std::complex<double> hurwitz_direct(std::complex<double> s, double x, std::uint64_t M) {
  std::complex<double> total = 0.0;
  for (std::uint64_t n = M; n-- > 0;) total += std::pow(static_cast<double>(n) + x, -s);
  const double a = static_cast<double>(M) + x;
  total += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  return total;
}

/// Sum a_n n^{-s} over n <= M.
inline std::complex<double> dirichlet_series(const std::vector<std::int64_t>& a, std::complex<double> s) {
  std::complex<double> total = 0.0;
  for (std::size_t n = a.size() - 1; n >= 1; --n) total += static_cast<double>(a[n]) * std::pow(static_cast<double>(n), -s);
  return total;
}

/// Determinant by fraction-free elimination.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Discriminant of a monic polynomial (coefficients low degree first) via the Sylvester matrix.
inline mpz_class poly_discriminant(const std::vector<mpz_class>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<mpz_class> d(n);
  for (std::size_t i = 1; i <= n; ++i) d[i - 1] = c[i] * static_cast<unsigned long>(i);
  const std::size_t size = 2 * n - 1;
  std::vector<std::vector<mpz_class>> S(size, std::vector<mpz_class>(size, 0));
  for (std::size_t r = 0; r < n - 1; ++r) {
    for (std::size_t j = 0; j <= n; ++j) S[r][r + j] = c[n - j];
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) S[n - 1 + r][r + j] = d[n - 1 - j];
  }
  mpz_class res = bareiss_det(S);
  if ((n * (n - 1) / 2) % 2) res = -res;
  return res;
}

}  // namespace oracle

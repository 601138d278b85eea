#include "lfdb/lfunc/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <numeric>

#include "lfdb/arith/primes.hpp"
#include "lfdb/error.hpp"

namespace lfdb::lfunc {

namespace {

void check_scan(const LFunction& L, double t_min, double t_max, double step) {
  if (!(t_min >= 0.0 && t_min < t_max)) throw DomainError("zero scan needs 0 <= t_min < t_max");
  if (!(step > 0.0)) throw DomainError("zero scan step must be positive");
  if (!L.self_dual() || L.degree() != 1) {
    throw UnsupportedError("zero scans are limited to self-dual degree-1 L-functions");
  }
}

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

// Scans grid points t_min + k*step for k in [k_begin, k_end].
ZeroList scan(const LFunction& L, double t_min, double t_max, double step, std::uint64_t k_begin,
              std::uint64_t k_end) {
  ZeroList out;
  out.lfunction_label = L.label();
  out.precision = kZeroBracketWidth;
  auto grid = [&](std::uint64_t k) { return std::min(t_max, t_min + static_cast<double>(k) * step); };
  double a = grid(k_begin);
  double za = z_function(L, a);
  for (std::uint64_t k = k_begin + 1; k <= k_end; ++k) {
    double b = grid(k);
    double zb = z_function(L, b);
    if (opposite(za, zb)) {
      double lo = a, hi = b, zlo = za;
      while (hi - lo > kZeroBracketWidth) {
        const double mid = 0.5 * (lo + hi);
        const double zm = z_function(L, mid);
        if (zm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (opposite(zlo, zm)) {
          hi = mid;
        } else {
          lo = mid;
          zlo = zm;
        }
      }
      const double t = 0.5 * (lo + hi);
      if (std::abs(z_function(L, t)) >= kZeroResidual) {
        throw DomainError("sign change near t = " + std::to_string(t) + " is not a zero (|Z| too large)");
      }
      out.ordinates.push_back(t);
      out.brackets.push_back({lo, hi});
    }
    a = b;
    za = zb;
  }
  return out;
}

std::uint64_t grid_steps(double t_min, double t_max, double step) {
  return static_cast<std::uint64_t>(std::ceil((t_max - t_min) / step - 1e-12));
}

}  // namespace

ZeroList find_zeros(const LFunction& L, double t_min, double t_max, double step) {
  check_scan(L, t_min, t_max, step);
  return scan(L, t_min, t_max, step, 0, grid_steps(t_min, t_max, step));
}

ZeroList find_zeros_parallel(const LFunction& L, double t_min, double t_max, double step, unsigned threads) {
  check_scan(L, t_min, t_max, step);
  const std::uint64_t steps = grid_steps(t_min, t_max, step);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(steps, 64))));
  std::vector<std::future<ZeroList>> parts;
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint64_t b = steps * i / threads;
    const std::uint64_t e = steps * (i + 1) / threads;
    parts.push_back(std::async(std::launch::async, [&, b, e] { return scan(L, t_min, t_max, step, b, e); }));
  }
  ZeroList merged;
  merged.lfunction_label = L.label();
  for (auto& f : parts) {
    auto part = f.get();
    for (std::size_t i = 0; i < part.ordinates.size(); ++i) {
      merged.ordinates.push_back(part.ordinates[i]);
      merged.brackets.push_back(part.brackets[i]);
    }
  }
  return merged;
}

double zero_count_estimate(const LFunction& L, double T) {
  if (!(T > 0.0)) throw DomainError("zero_count_estimate needs T > 0");
  const double x = T / (2.0 * std::numbers::pi);
  return x * std::log(x / std::numbers::e) + 0.875 + x * std::log(L.conductor().get_d());
}

std::vector<Sample> critical_line_samples(const LFunction& L, double t_max, unsigned points) {
  if (points == 0) throw DomainError("sample count must be positive");
  if (!(t_max >= 0.0)) throw DomainError("t_max must be non-negative");
  if (t_max == 0.0 || points == 1) return {{0.0, z_function(L, 0.0)}};
  std::vector<Sample> out;
  out.reserve(points);
  for (unsigned i = 0; i < points; ++i) {
    const double t = t_max * i / (points - 1);
    out.push_back({t, z_function(L, t)});
  }
  return out;
}

std::size_t sign_changes(const std::vector<Sample>& samples) {
  std::size_t count = 0;
  double last = 0.0;
  for (const auto& s : samples) {
    if (s.z == 0.0) continue;
    if (last != 0.0 && opposite(last, s.z)) ++count;
    last = s.z;
  }
  return count;
}

std::map<std::uint64_t, std::uint64_t> prime_race(std::uint64_t modulus, std::uint64_t limit) {
  if (modulus < 2) throw DomainError("prime_race needs N >= 2");
  if (limit < modulus) throw DomainError("prime_race needs X >= N");
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t a = 1; a < modulus; ++a) {
    if (std::gcd(a, modulus) == 1) counts[a] = 0;
  }
  for (auto p : arith::sieve_primes(limit)) {
    if (modulus % p != 0) ++counts[p % modulus];
  }
  return counts;
}

}  // namespace lfdb::lfunc

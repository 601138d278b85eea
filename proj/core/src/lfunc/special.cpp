#include "lfdb/lfunc/special.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "lfdb/error.hpp"

namespace lfdb::lfunc {

namespace {

constexpr unsigned kBernoulliCount = 2 * kMaxBernoulliTerms + 3;

std::vector<mpq_class> compute_bernoulli() {
  std::vector<mpq_class> b(kBernoulliCount);
  b[0] = 1;
  for (unsigned m = 1; m < kBernoulliCount; ++m) {
    mpq_class sum = 0;
    mpz_class binom = 1;  // C(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      sum += mpq_class(binom) * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -sum / (m + 1);
    b[m].canonicalize();
  }
  return b;
}

std::vector<double> compute_taylor() {
  const auto b = bernoulli_numbers();
  std::vector<double> out;
  mpz_class factorial = 1;
  for (unsigned k = 0; 2 * k < b.size(); ++k) {
    if (k > 0) factorial *= (2 * k - 1) * (2 * k);
    mpq_class q = b[2 * k] / mpq_class(factorial);
    q.canonicalize();
    out.push_back(q.get_d());
  }
  return out;
}

}  // namespace

std::span<const mpq_class> bernoulli_numbers() {
  static const std::vector<mpq_class> table = compute_bernoulli();
  return table;
}

std::span<const double> bernoulli_taylor_coefficients() {
  static const std::vector<double> table = compute_taylor();
  return table;
}

Complex log_gamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PoleError("Gamma has a pole at a non-positive integer");
  }
  // recurrence Gamma(z) = Gamma(z + n) / (z (z+1) ... (z+n-1)) until Stirling is accurate
  Complex shift = 0.0;
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const auto b = bernoulli_numbers();
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (unsigned k = 1; k <= 10; ++k) {
    series += b[2 * k].get_d() / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series - shift;
}

}  // namespace lfdb::lfunc

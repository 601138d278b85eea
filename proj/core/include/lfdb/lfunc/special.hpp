#pragma once

#include <complex>
#include <span>

#include <gmpxx.h>

namespace lfdb::lfunc {

using Complex = std::complex<double>;

/// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2).
std::span<const mpq_class> bernoulli_numbers();

/// B_{2k} / (2k)! as doubles for k = 0..kMaxBernoulliTerms + 1, rounded from exact rationals.
std::span<const double> bernoulli_taylor_coefficients();

inline constexpr unsigned kMaxBernoulliTerms = 30;

/// log Gamma(z) on some branch; exp() of it is Gamma(z). Throws PoleError at z = 0, -1, ...
Complex log_gamma(Complex z);

}  // namespace lfdb::lfunc

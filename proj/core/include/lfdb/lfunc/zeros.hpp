#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lfdb/lfunc/lfunction.hpp"

namespace lfdb::lfunc {

struct ZeroBracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct ZeroList {
  std::string lfunction_label;
  std::vector<double> ordinates;
  /// Absolute error bound per ordinate.
  double precision = 1e-8;
  /// Final sign-change bracket for each ordinate, same order.
  std::vector<ZeroBracket> brackets;
};

inline constexpr double kDefaultZeroStep = 0.05;
inline constexpr double kZeroBracketWidth = 1e-8;
inline constexpr double kZeroResidual = 1e-6;

/// Sign changes of Z on a grid over [t_min, t_max], each refined by bisection.
/// A step that skips a pair of close zeros goes unnoticed; compare with zero_count_estimate.
ZeroList find_zeros(const LFunction& L, double t_min, double t_max, double step = kDefaultZeroStep);

/// Same scan split into disjoint chunks evaluated on up to `threads` workers.
ZeroList find_zeros_parallel(const LFunction& L, double t_min, double t_max, double step, unsigned threads);

/// (T/2pi) log(T/(2 pi e)) + 7/8 + (T/2pi) log N.
double zero_count_estimate(const LFunction& L, double T);

struct Sample {
  double t = 0.0;
  double z = 0.0;
};

/// `points` evenly spaced samples of Z on [0, t_max]; a single sample at 0 when t_max = 0.
std::vector<Sample> critical_line_samples(const LFunction& L, double t_max, unsigned points);

std::size_t sign_changes(const std::vector<Sample>& samples);

/// Number of primes p <= X in each residue class a mod N with gcd(a, N) = 1.
std::map<std::uint64_t, std::uint64_t> prime_race(std::uint64_t modulus, std::uint64_t limit);

}  // namespace lfdb::lfunc

#include <gtest/gtest.h>

#include <random>

#include "lfdb/arith/character.hpp"
#include "lfdb/arith/elliptic.hpp"
#include "lfdb/arith/factor.hpp"
#include "lfdb/arith/integer.hpp"
#include "lfdb/arith/kronecker.hpp"
#include "lfdb/arith/primes.hpp"
#include "lfdb/error.hpp"
#include "oracles.hpp"

using namespace lfdb;
using namespace lfdb::arith;

namespace {

std::array<Integer, 5> ainvs(std::array<long, 5> a) {
  return {Integer(a[0]), Integer(a[1]), Integer(a[2]), Integer(a[3]), Integer(a[4])};
}

oracle::CharTable table_of(const DirichletCharacter& chi, std::uint64_t E) {
  const auto N = chi.modulus();
  oracle::CharTable t(N, -1);
  for (std::uint64_t n = 0; n < N; ++n) {
    const auto v = chi(static_cast<std::int64_t>(n == 0 && N == 1 ? 1 : n));
    if (v.is_zero()) continue;
    t[n] = static_cast<std::int64_t>(v.root().exponent * (E / v.root().order) % E);
  }
  return t;
}

}  // namespace

TEST(Primes, SmallLists) {
  EXPECT_EQ(sieve_primes(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(sieve_primes(2), (std::vector<std::uint64_t>{2}));
  EXPECT_TRUE(sieve_primes(1).empty());
  EXPECT_TRUE(sieve_primes(0).empty());
}

TEST(Primes, MillionMatchesTrialDivision) {
  const auto primes = sieve_primes(1'000'000);
  EXPECT_EQ(primes.size(), 78498u);
  EXPECT_EQ(primes, oracle::primes_td(1'000'000));
}

TEST(Primes, IsPrime) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime_td(n)) << n;
  EXPECT_TRUE(is_probable_prime(Integer("170141183460469231731687303715884105727")));
  EXPECT_FALSE(is_probable_prime(Integer("170141183460469231731687303715884105729")));
}

TEST(Factor, Examples) {
  EXPECT_TRUE(factorize(1).factors.empty());
  const auto f12 = factorize(12);
  ASSERT_EQ(f12.factors.size(), 2u);
  EXPECT_EQ(f12.factors[0].prime, 2);
  EXPECT_EQ(f12.factors[0].exponent, 2u);
  EXPECT_EQ(f12.factors[1].prime, 3);
  const auto f5077 = factorize(5077);
  ASSERT_EQ(f5077.factors.size(), 1u);
  EXPECT_EQ(f5077.factors[0].prime, 5077);
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(-6), DomainError);
}

TEST(Factor, PropertyProductAndOrder) {
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 500; ++i) {
    const Integer n = Integer(static_cast<unsigned long>(rng() % 1'000'000'000'000ull)) + 1;
    const auto f = factorize(n);
    EXPECT_EQ(f.product(), n);
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      EXPECT_GE(f.factors[k].exponent, 1u);
      EXPECT_TRUE(is_probable_prime(f.factors[k].prime));
      if (k) EXPECT_LT(f.factors[k - 1].prime, f.factors[k].prime);
    }
  }
}

TEST(Factor, PhiAndMoebiusAgainstOracle) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    EXPECT_EQ(euler_phi(n), oracle::phi(n));
    EXPECT_EQ(moebius(n), oracle::mobius(n));
  }
}

TEST(Integer, CanonicalDecimal) {
  EXPECT_TRUE(is_canonical_decimal("0"));
  EXPECT_TRUE(is_canonical_decimal("-12"));
  EXPECT_FALSE(is_canonical_decimal("-0"));
  EXPECT_FALSE(is_canonical_decimal("012"));
  EXPECT_FALSE(is_canonical_decimal("+1"));
  EXPECT_FALSE(is_canonical_decimal(""));
  EXPECT_THROW(parse_integer("1e3"), ParseError);
}

TEST(Character, GroupSizesAndPrincipal) {
  for (std::uint64_t N = 1; N <= 60; ++N) {
    const auto group = character_group(N);
    EXPECT_EQ(group.size(), oracle::phi(N));
    EXPECT_EQ(std::count_if(group.begin(), group.end(), [](const auto& c) { return c.is_principal(); }), 1);
  }
}

TEST(Character, ModOneAndFour) {
  const auto g1 = character_group(1);
  ASSERT_EQ(g1.size(), 1u);
  for (int n = -5; n < 10; ++n) EXPECT_EQ(g1[0](n).to_int(), 1);
  const auto g4 = character_group(4);
  ASSERT_EQ(g4.size(), 2u);
  const auto& chi = g4[1];
  EXPECT_EQ(chi(1).to_int(), 1);
  EXPECT_EQ(chi(3).to_int(), -1);
  EXPECT_EQ(chi(2).to_int(), 0);
  EXPECT_EQ(chi(7).to_int(), -1);
}

TEST(Character, ModFiveOrders) {
  std::multiset<std::uint64_t> orders;
  for (const auto& chi : character_group(5)) orders.insert(chi.order());
  EXPECT_EQ(orders, (std::multiset<std::uint64_t>{1, 2, 4, 4}));
  for (const auto& chi : character_group(5)) {
    if (chi.order() == 4) EXPECT_EQ(chi(2).root().order, 4u);
  }
}

TEST(Character, MatchesBruteForceHomomorphisms) {
  for (std::uint64_t N = 1; N <= 24; ++N) {
    const auto E = oracle::phi(N);
    std::set<oracle::CharTable> ours;
    for (const auto& chi : character_group(N)) ours.insert(table_of(chi, E));
    EXPECT_EQ(ours, oracle::all_characters(N, E)) << "N = " << N;
  }
}

TEST(Character, TypeInvariants) {
  for (std::uint64_t N = 1; N <= 40; ++N) {
    for (const auto& chi : character_group(N)) {
      const auto n_mod = static_cast<std::int64_t>(N);
      std::complex<double> total = 0.0;
      for (std::int64_t m = 0; m < 2 * n_mod + 3; ++m) {
        EXPECT_EQ(chi(m).is_zero(), std::gcd<std::int64_t>(m, n_mod) > 1 || (N > 1 && m % n_mod == 0));
        EXPECT_EQ(chi(m), chi(m + n_mod));
        for (std::int64_t k = 0; k < n_mod + 2; ++k) EXPECT_EQ(chi(m * k), chi(m) * chi(k));
        if (!chi(m).is_zero()) EXPECT_EQ(chi.order() % chi(m).root().order, 0u);
      }
      for (std::int64_t m = 0; m < n_mod; ++m) total += chi(m).to_complex();
      if (!chi.is_principal()) EXPECT_LT(std::abs(total), 1e-9);
    }
  }
}

TEST(Character, ConductorByBruteForceDivisors) {
  for (std::uint64_t N = 1; N <= 40; ++N) {
    for (const auto& chi : character_group(N)) {
      // Smallest d | N such that chi is trivial on units congruent to 1 mod d.
      std::uint64_t expected = N;
      for (std::uint64_t d = 1; d <= N; ++d) {
        if (N % d) continue;
        bool trivial = true;
        for (std::uint64_t a = 1; a <= N && trivial; ++a) {
          if (std::gcd(a, N) == 1 && a % d == 1 % d && chi(static_cast<std::int64_t>(a)).to_complex() != 1.0) {
            trivial = false;
          }
        }
        if (trivial) {
          expected = d;
          break;
        }
      }
      const auto ind = conductor_of(chi);
      EXPECT_EQ(ind.conductor, expected);
      EXPECT_EQ(chi.conductor(), expected);
      EXPECT_TRUE(ind.primitive.is_primitive());
      for (std::int64_t a = 1; a <= static_cast<std::int64_t>(N); ++a) {
        if (std::gcd<std::int64_t>(a, static_cast<std::int64_t>(N)) == 1) EXPECT_EQ(ind.primitive(a), chi(a));
      }
    }
  }
}

TEST(Character, ConductorExamples) {
  for (std::uint64_t N : {1, 6, 12}) EXPECT_EQ(character_group(N)[0].conductor(), 1u);
  EXPECT_EQ(character_group(4)[1].conductor(), 4u);
  std::size_t induced_from_4 = 0;
  for (const auto& chi : character_group(8)) {
    if (chi.conductor() == 4) ++induced_from_4;
  }
  EXPECT_EQ(induced_from_4, 1u);
}

TEST(Character, GaussSums) {
  const auto tau = gauss_sum(character_group(4)[1]);
  EXPECT_NEAR(tau.real(), 0.0, 1e-12);
  EXPECT_NEAR(tau.imag(), 2.0, 1e-12);
  EXPECT_NEAR(std::abs(gauss_sum(character_group(1)[0]) - 1.0), 0.0, 1e-12);
  for (const auto& chi : character_group(5)) {
    if (chi.is_primitive()) EXPECT_NEAR(std::abs(gauss_sum(chi)), std::sqrt(5.0), 1e-12);
  }
  for (std::uint64_t N = 1; N <= 100; ++N) {
    for (const auto& chi : character_group(N)) {
      if (chi.is_primitive()) {
        EXPECT_LT(std::abs(std::norm(gauss_sum(chi)) - static_cast<double>(N)), 1e-10) << N;
      } else {
        EXPECT_THROW(gauss_sum(chi), DomainError);
      }
    }
  }
}

TEST(Character, LexicographicIndexRoundTrip) {
  for (std::uint64_t N = 1; N <= 50; ++N) {
    const auto group = character_group(N);
    for (std::size_t i = 0; i < group.size(); ++i) {
      EXPECT_EQ(lexicographic_index(group[i]), i);
      EXPECT_EQ(character_at(N, i), group[i]);
      if (i) EXPECT_LT(group[i - 1].exponents(), group[i].exponents());
    }
  }
}

TEST(Kronecker, Examples) {
  EXPECT_EQ(kronecker(-4, 3), -1);
  for (std::int64_t D : {-4, -3, 1, 5, 8, 12, -23}) EXPECT_EQ(kronecker(D, 1), 1);
  std::vector<int> k5;
  for (int n = 1; n <= 5; ++n) k5.push_back(kronecker(5, n));
  EXPECT_EQ(k5, (std::vector<int>{1, -1, -1, 1, 0}));
  EXPECT_THROW(kronecker(3, 5), DomainError);
  EXPECT_TRUE(is_fundamental_discriminant(-4));
  EXPECT_TRUE(is_fundamental_discriminant(12));
  EXPECT_FALSE(is_fundamental_discriminant(-16));
  EXPECT_FALSE(is_fundamental_discriminant(1));
}

TEST(Kronecker, PrimesAgainstResidueOracle) {
  for (std::int64_t D : {-4, -3, -7, -8, -23, 5, 8, 12, 13, -20}) {
    for (const auto p : oracle::primes_td(400)) EXPECT_EQ(kronecker(D, p), oracle::kronecker_prime(D, p)) << D << " " << p;
    const auto chi = kronecker_character(D);
    EXPECT_EQ(chi.modulus(), static_cast<std::uint64_t>(std::abs(D)));
    EXPECT_TRUE(chi.is_primitive());
    for (std::int64_t n = 1; n < 200; ++n) EXPECT_EQ(chi(n).to_int(), kronecker(D, n));
  }
}

TEST(Elliptic, PointCountsMatchNaive) {
  const std::vector<std::array<long, 5>> curves = {
      {0, -1, 1, -10, -20}, {0, 0, 1, -1, 0}, {0, 0, 1, -7, 6}, {1, 0, 1, 4, -6}, {0, 1, 1, -2, 0}};
  const std::vector<long> conductors = {11, 37, 5077, 14, 389};
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const EllipticCurveModel E(ainvs(curves[i]), Integer(conductors[i]));
    for (const auto p : oracle::primes_td(300)) {
      const auto naive = oracle::point_count_naive({curves[i][0], curves[i][1], curves[i][2], curves[i][3], curves[i][4]}, p);
      EXPECT_EQ(ec_point_count(E, p), naive) << conductors[i] << " p=" << p;
      EXPECT_EQ(oracle::point_count_squares({curves[i][0], curves[i][1], curves[i][2], curves[i][3], curves[i][4]}, p),
                naive)
          << conductors[i] << " p=" << p;
    }
  }
}

TEST(Elliptic, ReductionTypes) {
  const EllipticCurveModel E11(ainvs({0, -1, 1, 0, 0}), Integer(11));
  const auto r = ec_ap(E11, 11);
  EXPECT_NE(r.kind, ReductionKind::Good);
  EXPECT_TRUE(r.ap == -1 || r.ap == 0 || r.ap == 1);
  const EllipticCurveModel E37(ainvs({0, 0, 1, -1, 0}), Integer(37));
  EXPECT_EQ(ec_ap(E37, 2).ap, -2);
  // Root number -1 = a_37 for a prime of multiplicative reduction, so the reduction is nonsplit.
  EXPECT_EQ(ec_ap(E37, 37).kind, ReductionKind::NonsplitMultiplicative);
  EXPECT_EQ(ec_ap(E37, 37).ap, -1);
  EXPECT_EQ(ec_ap(E37, 37).ap, 38 - static_cast<std::int64_t>(oracle::point_count_naive({0, 0, 1, -1, 0}, 37)));
  EXPECT_THROW(ec_ap(E37, 4), DomainError);
  const EllipticCurveModel E27(ainvs({0, 0, 1, 0, -7}), Integer(27));
  EXPECT_EQ(ec_ap(E27, 3).kind, ReductionKind::Additive);
  EXPECT_EQ(ec_ap(E27, 3).ap, 0);
}

TEST(Elliptic, HasseIntervalAndKinds) {
  const EllipticCurveModel E(ainvs({0, 0, 1, -7, 6}), Integer(5077));
  for (const auto p : sieve_primes(3000)) {
    const auto r = ec_ap(E, p);
    if (r.kind == ReductionKind::Good) {
      EXPECT_LE(r.ap * r.ap, static_cast<std::int64_t>(4 * p));
    } else if (r.kind == ReductionKind::Additive) {
      EXPECT_EQ(r.ap, 0);
    } else {
      EXPECT_EQ(std::abs(r.ap), 1);
    }
  }
}

TEST(Elliptic, DiscriminantAndConductorConsistency) {
  EXPECT_EQ(weierstrass_discriminant(ainvs({0, 0, 1, -1, 0})), Integer(37));
  EXPECT_EQ(weierstrass_discriminant(ainvs({0, -1, 1, -10, -20})), Integer(-161051));
  EXPECT_THROW(EllipticCurveModel(ainvs({0, 0, 0, 0, 0}), Integer(1)), DomainError);
  EXPECT_EQ(EllipticCurveModel(ainvs({0, 0, 1, -7, 6}), Integer(5077)).equation(), "y^2 + y = x^3 - 7*x + 6");
}

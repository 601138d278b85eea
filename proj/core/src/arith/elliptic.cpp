#include "lfdb/arith/elliptic.hpp"

#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "lfdb/arith/factor.hpp"
#include "lfdb/arith/primes.hpp"
#include "lfdb/error.hpp"

namespace lfdb::arith {

Integer weierstrass_discriminant(const std::array<Integer, 5>& a) {
  const Integer &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
  const Integer b2 = a1 * a1 + 4 * a2;
  const Integer b4 = 2 * a4 + a1 * a3;
  const Integer b6 = a3 * a3 + 4 * a6;
  const Integer b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

EllipticCurveModel::EllipticCurveModel(std::array<Integer, 5> ainvs, Integer conductor)
    : ainvs_(std::move(ainvs)), conductor_(std::move(conductor)) {
  discriminant_ = weierstrass_discriminant(ainvs_);
  if (discriminant_ == 0) throw DomainError("singular Weierstrass model (discriminant 0)");
  if (sgn(conductor_) <= 0) throw DomainError("conductor must be positive");
  for (const auto& pp : factorize(conductor_).factors) {
    if (!mpz_divisible_p(discriminant_.get_mpz_t(), pp.prime.get_mpz_t())) {
      throw DomainError("conductor prime " + pp.prime.get_str() + " does not divide the discriminant");
    }
  }
}

namespace {

void append_term(std::ostringstream& out, const Integer& coeff, const std::string& monomial, bool& first) {
  if (coeff == 0) return;
  const bool negative = sgn(coeff) < 0;
  const Integer magnitude = abs(coeff);
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (monomial.empty()) {
    out << magnitude.get_str();
  } else if (magnitude == 1) {
    out << monomial;
  } else {
    out << magnitude.get_str() << "*" << monomial;
  }
  first = false;
}

}  // namespace

std::string EllipticCurveModel::equation() const {
  std::ostringstream out;
  out << "y^2";
  bool first = false;
  append_term(out, a1(), "x*y", first);
  append_term(out, a3(), "y", first);
  out << " = x^3";
  append_term(out, a2(), "x^2", first);
  append_term(out, a4(), "x", first);
  append_term(out, a6(), "", first);
  return out.str();
}

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Good: return "good";
    case ReductionKind::SplitMultiplicative: return "split multiplicative";
    case ReductionKind::NonsplitMultiplicative: return "nonsplit multiplicative";
    case ReductionKind::Additive: return "additive";
  }
  return "unknown";
}

namespace {

struct Reduced {
  std::uint64_t p;
  std::int64_t a1, a2, a3, a4, a6;

  std::int64_t mod(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p);
    v %= m;
    return v < 0 ? v + m : v;
  }
  // F(x, y) = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6
  std::int64_t f(std::int64_t x, std::int64_t y) const {
    const std::int64_t x2 = mod(x * x);
    const std::int64_t x3 = mod(x2 * x);
    return mod(mod(y * y) + mod(a1 * x % static_cast<std::int64_t>(p) * y) + mod(a3 * y) - x3 -
               mod(a2 * x2) - mod(a4 * x) - a6);
  }
  std::int64_t fx(std::int64_t x, std::int64_t y) const {
    return mod(a1 * y - mod(3 * mod(x * x)) - mod(2 * a2 * x) - a4);
  }
  std::int64_t fy(std::int64_t x, std::int64_t y) const { return mod(2 * y + a1 * x + a3); }
};

Reduced reduce_model(const EllipticCurveModel& curve, std::uint64_t p) {
  auto r = [&](const Integer& a) {
    Integer m;
    mpz_fdiv_r_ui(m.get_mpz_t(), a.get_mpz_t(), p);
    return static_cast<std::int64_t>(mpz_get_ui(m.get_mpz_t()));
  };
  return {p, r(curve.a1()), r(curve.a2()), r(curve.a3()), r(curve.a4()), r(curve.a6())};
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) throw DomainError("prime too large for point counting");
}

std::uint64_t count_points(const Reduced& e) {
  const std::uint64_t p = e.p;
  const auto ip = static_cast<std::int64_t>(p);
  std::uint64_t affine = 0;
  if (p <= 3) {
    for (std::int64_t x = 0; x < ip; ++x) {
      for (std::int64_t y = 0; y < ip; ++y) {
        if (e.f(x, y) == 0) ++affine;
      }
    }
    return affine + 1;
  }
  // (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t y = 1; y <= p / 2; ++y) chi[y * y % p] = 1;
  for (std::int64_t x = 0; x < ip; ++x) {
    const std::int64_t lin = e.mod(e.a1 * x + e.a3);
    const std::int64_t x2 = e.mod(x * x);
    const std::int64_t cubic = e.mod(e.mod(x2 * x) + e.mod(e.a2 * x2) + e.mod(e.a4 * x) + e.a6);
    const std::int64_t d = e.mod(4 * cubic + lin * lin);
    affine += static_cast<std::uint64_t>(1 + chi[static_cast<std::size_t>(d)]);
  }
  return affine + 1;
}

std::optional<std::pair<std::int64_t, std::int64_t>> singular_point(const Reduced& e) {
  const auto ip = static_cast<std::int64_t>(e.p);
  if (e.p == 2) {
    for (std::int64_t x = 0; x < 2; ++x) {
      for (std::int64_t y = 0; y < 2; ++y) {
        if (e.f(x, y) == 0 && e.fx(x, y) == 0 && e.fy(x, y) == 0) return std::make_pair(x, y);
      }
    }
    return std::nullopt;
  }
  const std::int64_t half = (ip + 1) / 2;  // inverse of 2
  for (std::int64_t x = 0; x < ip; ++x) {
    const std::int64_t y = e.mod(-(e.a1 * x + e.a3) % ip * half);
    if (e.f(x, y) == 0 && e.fx(x, y) == 0) return std::make_pair(x, y);
  }
  return std::nullopt;
}

// Slopes m of the tangent lines Y = mX at the node after moving the singular point to the
// origin: roots of m^2 + a1 m - (3 x0 + a2) over F_p.
int tangent_slope_count(const Reduced& e, std::int64_t x0) {
  const auto ip = static_cast<std::int64_t>(e.p);
  const std::int64_t c = e.mod(3 * x0 + e.a2);
  int roots = 0;
  for (std::int64_t m = 0; m < ip; ++m) {
    if (e.mod(m * m + e.a1 * m - c) == 0) ++roots;
  }
  return roots;
}

}  // namespace

std::uint64_t ec_point_count(const EllipticCurveModel& curve, std::uint64_t p) {
  require_prime(p);
  return count_points(reduce_model(curve, p));
}

ReductionData ec_ap(const EllipticCurveModel& curve, std::uint64_t p) {
  require_prime(p);
  const Reduced e = reduce_model(curve, p);
  const auto count = static_cast<std::int64_t>(count_points(e));
  const std::int64_t ap = static_cast<std::int64_t>(p) + 1 - count;
  const bool divides_disc = mpz_divisible_ui_p(curve.discriminant().get_mpz_t(), p) != 0;
  const bool divides_cond = mpz_divisible_ui_p(curve.conductor().get_mpz_t(), p) != 0;
  if (!divides_disc) {
    if (divides_cond) throw DomainError("conductor divisible by a prime of good reduction");
    return {p, ReductionKind::Good, ap};
  }
  if (!divides_cond) {
    throw DomainError("model is not minimal at p = " + std::to_string(p));
  }
  const auto node = singular_point(e);
  if (!node) throw std::logic_error("reduction mod a discriminant prime has no singular point");
  ReductionKind kind;
  switch (tangent_slope_count(e, node->first)) {
    case 2: kind = ReductionKind::SplitMultiplicative; break;
    case 0: kind = ReductionKind::NonsplitMultiplicative; break;
    default: kind = ReductionKind::Additive; break;
  }
  // smooth-locus count: p - 1 (split), p + 1 (nonsplit), p (additive)
  const std::int64_t expected = kind == ReductionKind::SplitMultiplicative      ? 1
                                : kind == ReductionKind::NonsplitMultiplicative ? -1
                                                                                : 0;
  if (ap != expected) throw std::logic_error("tangent-slope and point-count reduction types disagree");
  return {p, kind, ap};
}

}  // namespace lfdb::arith

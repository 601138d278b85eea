#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "lfdb/arith/integer.hpp"

namespace lfdb::arith {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q. The conductor is supplied by the
/// caller (ingested data); only its consistency with the discriminant is checked.
class EllipticCurveModel {
 public:
  EllipticCurveModel(std::array<Integer, 5> ainvs, Integer conductor);

  const std::array<Integer, 5>& ainvs() const { return ainvs_; }
  const Integer& a1() const { return ainvs_[0]; }
  const Integer& a2() const { return ainvs_[1]; }
  const Integer& a3() const { return ainvs_[2]; }
  const Integer& a4() const { return ainvs_[3]; }
  const Integer& a6() const { return ainvs_[4]; }
  const Integer& conductor() const { return conductor_; }
  const Integer& discriminant() const { return discriminant_; }

  /// "y^2 + y = x^3 - 7*x + 6"
  std::string equation() const;

 private:
  std::array<Integer, 5> ainvs_;
  Integer conductor_;
  Integer discriminant_;
};

Integer weierstrass_discriminant(const std::array<Integer, 5>& ainvs);

enum class ReductionKind { Good, SplitMultiplicative, NonsplitMultiplicative, Additive };

std::string to_string(ReductionKind kind);

struct ReductionData {
  std::uint64_t prime = 0;
  ReductionKind kind = ReductionKind::Good;
  std::int64_t ap = 0;
};

/// Number of points of the reduction mod p, point at infinity included. When p divides the
/// discriminant the singular point is counted as well, so ap = p + 1 - count at every prime.
std::uint64_t ec_point_count(const EllipticCurveModel& curve, std::uint64_t p);

/// Throws DomainError if p is not prime, or if the model's bad primes disagree with the
/// ingested conductor at p (non-minimal model or inconsistent data).
ReductionData ec_ap(const EllipticCurveModel& curve, std::uint64_t p);

}  // namespace lfdb::arith

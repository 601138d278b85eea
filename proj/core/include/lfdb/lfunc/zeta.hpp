#pragma once

#include <complex>

#include "lfdb/arith/character.hpp"
#include "lfdb/lfunc/special.hpp"

namespace lfdb::lfunc {

/// Truncation point M and number of Bernoulli correction terms K for Euler-Maclaurin.
struct EulerMaclaurinPlan {
  unsigned truncation = 0;
  unsigned bernoulli_terms = 0;
};

/// Fixed table keyed on |Im s|.
///   |t| <= 10: M = 20, K = 16      |t| <= 30: M = 40, K = 24
///   |t| <= 60: M = 70, K = 30      |t| <= 100: M = 110, K = 30
/// beyond that M = ceil|t| + 20, K = 30, with correspondingly weaker guarantees.
EulerMaclaurinPlan plan_for(Complex s);

struct Evaluation {
  Complex value;
  /// Size of the first omitted correction term scaled by |s + 2K + 1| / (Re s + 2K + 1).
  double error_bound = 0.0;
};

/// Hurwitz zeta(s, x) minus its polar part 1/(s - 1); entire in s. x in (0, 1].
Evaluation hurwitz_zeta_regular(Complex s, double x, EulerMaclaurinPlan plan);

/// zeta(s) for s != 1. terms overrides the truncation point (terms >= 10) when nonzero.
Complex zeta_em(Complex s, unsigned terms = 0);
Evaluation zeta_em_with_bound(Complex s, unsigned terms = 0);

/// Hurwitz zeta(s, x) for x in (0, 1], s != 1.
Complex hurwitz_zeta(Complex s, double x);

/// L(s, chi) = N^{-s} sum_{a=1}^{N} chi(a) zeta(s, a/N). Pole only for principal chi at s = 1.
Complex dirichlet_L(const arith::DirichletCharacter& chi, Complex s);

}  // namespace lfdb::lfunc

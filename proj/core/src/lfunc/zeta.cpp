#include "lfdb/lfunc/zeta.hpp"

#include <cmath>
#include <string>

#include "lfdb/error.hpp"

namespace lfdb::lfunc {

EulerMaclaurinPlan plan_for(Complex s) {
  const double t = std::abs(s.imag());
  if (t <= 10.0) return {20, 16};
  if (t <= 30.0) return {40, 24};
  if (t <= 60.0) return {70, 30};
  if (t <= 100.0) return {110, 30};
  return {static_cast<unsigned>(std::ceil(t)) + 20, 30};
}

namespace {

// ((M+x)^{1-s} - 1) / (s - 1), stable as s -> 1
Complex regular_tail(Complex s, double log_mx) {
  const Complex z = (1.0 - s) * log_mx;
  if (std::abs(z) < 1e-4) {
    // expm1(z)/z = 1 + z/2 + z^2/6 + z^3/24
    const Complex ratio = 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
    return -log_mx * ratio;
  }
  return (std::exp(z) - 1.0) / (s - 1.0);
}

bool is_one(Complex s) { return s.real() == 1.0 && s.imag() == 0.0; }

}  // namespace

Evaluation hurwitz_zeta_regular(Complex s, double x, EulerMaclaurinPlan plan) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("hurwitz_zeta: x must lie in (0, 1]");
  if (plan.bernoulli_terms > kMaxBernoulliTerms) throw DomainError("too many Bernoulli terms");
  const unsigned m = plan.truncation;
  Complex sum = 0.0;
  for (unsigned n = 0; n < m; ++n) sum += std::exp(-s * std::log(n + x));
  const double log_mx = std::log(m + x);
  const Complex mx_pow = std::exp(-s * log_mx);  // (M+x)^{-s}
  sum += regular_tail(s, log_mx);
  sum += 0.5 * mx_pow;

  // sum_k B_2k/(2k)! s(s+1)...(s+2k-2) (M+x)^{-s-2k+1}
  const auto taylor = bernoulli_taylor_coefficients();
  const double inv = 1.0 / (m + x);
  Complex rising = s;             // (s)_{2k-1}
  Complex power = mx_pow * inv;   // (M+x)^{-s-2k+1}
  Complex term = 0.0;
  for (unsigned k = 1; k <= plan.bernoulli_terms; ++k) {
    term = taylor[k] * rising * power;
    sum += term;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    power *= inv * inv;
  }
  const unsigned k = plan.bernoulli_terms + 1;
  const Complex next = taylor[k] * rising * power;
  const double sigma = s.real() + 2.0 * k - 1.0;
  double scale = std::abs(s + (2.0 * k - 1.0));
  if (sigma > 0) scale /= sigma;
  return {sum, std::abs(next) * std::max(1.0, scale)};
}

Evaluation zeta_em_with_bound(Complex s, unsigned terms) {
  if (is_one(s)) throw PoleError("zeta has a pole at s = 1");
  EulerMaclaurinPlan plan = plan_for(s);
  if (terms != 0) {
    if (terms < 10) throw DomainError("zeta_em: at least 10 terms are required");
    plan.truncation = terms;
  }
  Evaluation e = hurwitz_zeta_regular(s, 1.0, plan);
  e.value += 1.0 / (s - 1.0);
  return e;
}

Complex zeta_em(Complex s, unsigned terms) { return zeta_em_with_bound(s, terms).value; }

Complex hurwitz_zeta(Complex s, double x) {
  if (is_one(s)) throw PoleError("Hurwitz zeta has a pole at s = 1");
  return hurwitz_zeta_regular(s, x, plan_for(s)).value + 1.0 / (s - 1.0);
}

Complex dirichlet_L(const arith::DirichletCharacter& chi, Complex s) {
  if (chi.is_principal() && is_one(s)) throw PoleError("principal L-function has a pole at s = 1");
  const std::uint64_t n = chi.modulus();
  const EulerMaclaurinPlan plan = plan_for(s);
  Complex sum = 0.0;
  Complex polar = 0.0;
  for (std::uint64_t a = 1; a <= n; ++a) {
    const arith::CharValue v = chi(static_cast<std::int64_t>(a));
    if (v.is_zero()) continue;
    const Complex c = v.to_complex();
    sum += c * hurwitz_zeta_regular(s, static_cast<double>(a) / static_cast<double>(n), plan).value;
    polar += c;
  }
  // sum of chi(a) vanishes for non-principal chi, which removes the pole
  if (chi.is_principal()) sum += polar / (s - 1.0);
  return std::exp(-s * std::log(static_cast<double>(n))) * sum;
}

}  // namespace lfdb::lfunc

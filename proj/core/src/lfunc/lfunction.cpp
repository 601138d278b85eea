#include "lfdb/lfunc/lfunction.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "lfdb/arith/factor.hpp"
#include "lfdb/arith/kronecker.hpp"
#include "lfdb/arith/primes.hpp"
#include "lfdb/error.hpp"
#include "lfdb/lfunc/zeta.hpp"

namespace lfdb::lfunc {

std::string to_string(LKind kind) {
  switch (kind) {
    case LKind::RiemannZeta: return "riemann-zeta";
    case LKind::Dirichlet: return "dirichlet";
    case LKind::DedekindQuadratic: return "dedekind-quadratic";
    case LKind::EllipticCurve: return "elliptic-curve";
  }
  return "unknown";
}

LKind kind_from_string(const std::string& name) {
  for (auto k : {LKind::RiemannZeta, LKind::Dirichlet, LKind::DedekindQuadratic, LKind::EllipticCurve}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown L-function kind '" + name + "'");
}

std::string to_string(Normalization n) { return n == Normalization::Analytic ? "analytic" : "arithmetic"; }

double LFunction::critical_line() const {
  return normalization_ == Normalization::Analytic ? 0.5 : (weight_ + 1) / 2.0;
}

Complex LFunction::coefficient(std::uint64_t n) const {
  if (n == 0) throw DomainError("Dirichlet coefficients are indexed from 1");
  if (character_ && kind_ == LKind::Dirichlet) return (*character_)(static_cast<std::int64_t>(n)).to_complex();
  if (n >= integer_coeffs_.size()) {
    throw DomainError("coefficient a_" + std::to_string(n) + " beyond the stored bound " + std::to_string(bound_));
  }
  return integer_coeffs_[n].get_d();
}

LFunction LFunction::with_label(std::string label) const {
  LFunction copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

namespace {

void check_bound(std::uint64_t bound, std::uint64_t max) {
  if (bound == 0) throw DomainError("coefficient bound must be positive");
  if (bound > max) {
    throw DomainError("coefficient bound " + std::to_string(bound) + " exceeds the sieve limit " +
                      std::to_string(max));
  }
}

EulerFactor<Integer> integer_factor(std::uint64_t p, std::initializer_list<long> coeffs) {
  EulerFactor<Integer> f{p, {}};
  for (long c : coeffs) f.coefficients.emplace_back(c);
  // drop trailing zeros so degree_at_p reflects the true degree
  while (f.coefficients.size() > 1 && f.coefficients.back() == 0) f.coefficients.pop_back();
  return f;
}

}  // namespace

LFunction riemann_zeta(std::uint64_t bound) {
  check_bound(bound, kMaxCoefficientBound);
  LFunction L;
  L.label_ = "Riemann";
  L.kind_ = LKind::RiemannZeta;
  L.bound_ = bound;
  for (auto p : arith::sieve_primes(bound)) L.euler_factors_.emplace(p, integer_factor(p, {1, -1}));
  if (L.euler_factors_.empty()) {
    L.integer_coeffs_ = {Integer(0), Integer(1)};
  } else {
    L.integer_coeffs_ = dirichlet_from_euler(L.euler_factors_, bound);
  }
  return L;
}

Complex dirichlet_root_number(const arith::DirichletCharacter& chi) {
  const Complex tau = gauss_sum(chi);
  const Complex i_a = chi.parity() == 1 ? Complex(0.0, 1.0) : Complex(1.0, 0.0);
  return tau / (i_a * std::sqrt(static_cast<double>(chi.modulus())));
}

std::map<std::uint64_t, EulerFactor<CyclotomicInteger>> character_euler_factors(const arith::DirichletCharacter& chi,
                                                                               std::uint64_t bound) {
  const std::uint64_t order = chi.order();
  std::map<std::uint64_t, EulerFactor<CyclotomicInteger>> factors;
  for (auto p : arith::sieve_primes(bound)) {
    EulerFactor<CyclotomicInteger> f{p, {CyclotomicInteger::constant(1, order)}};
    const auto v = chi(static_cast<std::int64_t>(p));
    if (!v.is_zero()) f.coefficients.push_back(-CyclotomicInteger::from_char_value(v, order));
    factors.emplace(p, std::move(f));
  }
  return factors;
}

std::vector<CyclotomicInteger> character_coefficients(const arith::DirichletCharacter& chi, std::uint64_t bound) {
  check_bound(bound, kMaxCoefficientBound);
  if (bound == 1) {
    return {CyclotomicInteger(chi.order()), CyclotomicInteger::constant(1, chi.order())};
  }
  return dirichlet_from_euler(character_euler_factors(chi, bound), bound);
}

LFunction dirichlet_lfunction(const arith::DirichletCharacter& chi, std::uint64_t bound) {
  check_bound(bound, kMaxCoefficientBound);
  if (!chi.is_primitive()) throw DomainError("dirichlet_lfunction requires a primitive character");
  LFunction L;
  L.kind_ = LKind::Dirichlet;
  L.conductor_ = from_uint64(chi.modulus());
  L.parity_ = chi.parity();
  L.self_dual_ = chi.is_real();
  L.root_number_ = dirichlet_root_number(chi);
  L.bound_ = bound;
  L.character_ = chi;
  if (chi.is_real()) {
    for (auto p : arith::sieve_primes(bound)) {
      L.euler_factors_.emplace(p, integer_factor(p, {1, -chi(static_cast<std::int64_t>(p)).to_int()}));
    }
    L.integer_coeffs_ = L.euler_factors_.empty() ? std::vector<Integer>{Integer(0), Integer(1)}
                                                 : dirichlet_from_euler(L.euler_factors_, bound);
  }
  return L;
}

LFunction dedekind_quadratic(std::int64_t discriminant, std::uint64_t bound) {
  check_bound(bound, kMaxCoefficientBound);
  if (!arith::is_fundamental_discriminant(discriminant)) {
    throw DomainError(std::to_string(discriminant) + " is not a fundamental discriminant");
  }
  LFunction L;
  L.kind_ = LKind::DedekindQuadratic;
  L.degree_ = 2;
  L.conductor_ = from_int64(std::llabs(discriminant));
  L.parity_ = discriminant < 0 ? 1 : 0;
  L.bound_ = bound;
  L.discriminant_ = discriminant;
  L.character_ = arith::kronecker_character(discriminant);

  std::vector<long> conv(bound + 1, 0);
  for (std::uint64_t d = 1; d <= bound; ++d) {
    const int k = arith::kronecker(discriminant, static_cast<std::int64_t>(d));
    if (k == 0) continue;
    for (std::uint64_t m = d; m <= bound; m += d) conv[m] += k;
  }
  L.integer_coeffs_.reserve(bound + 1);
  for (long c : conv) L.integer_coeffs_.emplace_back(c);

  for (auto p : arith::sieve_primes(bound)) {
    const int k = arith::kronecker(discriminant, static_cast<std::int64_t>(p));
    // (1 - t)(1 - k t)
    L.euler_factors_.emplace(p, integer_factor(p, {1, -1 - k, k}));
  }
  return L;
}

LFunction ec_lfunction(const arith::EllipticCurveModel& curve, std::uint64_t bound) {
  check_bound(bound, kMaxEllipticCoefficientBound);
  LFunction L;
  L.kind_ = LKind::EllipticCurve;
  L.degree_ = 2;
  L.weight_ = 1;
  L.normalization_ = Normalization::Arithmetic;
  L.conductor_ = curve.conductor();
  L.bound_ = bound;

  // w = -prod_{p | N} w_p with w_p = -a_p at multiplicative primes
  bool semistable = true;
  int sign = -1;
  for (const auto& pp : arith::factorize(curve.conductor()).factors) {
    if (pp.exponent > 1 || !fits_int64(pp.prime)) {
      semistable = false;
      break;
    }
    const auto r = arith::ec_ap(curve, to_uint64(pp.prime));
    sign *= static_cast<int>(-r.ap);
  }
  if (semistable) {
    L.root_number_ = Complex(sign, 0.0);
  } else {
    L.root_number_.reset();
  }

  for (auto p : arith::sieve_primes(bound)) {
    const auto r = arith::ec_ap(curve, p);
    const auto ip = static_cast<long>(p);
    switch (r.kind) {
      case arith::ReductionKind::Good:
        L.euler_factors_.emplace(p, integer_factor(p, {1, -r.ap, ip}));
        break;
      case arith::ReductionKind::SplitMultiplicative:
      case arith::ReductionKind::NonsplitMultiplicative:
        L.euler_factors_.emplace(p, integer_factor(p, {1, -r.ap}));
        break;
      case arith::ReductionKind::Additive:
        L.euler_factors_.emplace(p, integer_factor(p, {1}));
        break;
    }
  }
  L.integer_coeffs_ = L.euler_factors_.empty() ? std::vector<Integer>{Integer(0), Integer(1)}
                                               : dirichlet_from_euler(L.euler_factors_, bound);
  return L;
}

Complex evaluate(const LFunction& L, Complex s) {
  switch (L.kind()) {
    case LKind::RiemannZeta: return zeta_em(s);
    case LKind::Dirichlet: return dirichlet_L(*L.character(), s);
    case LKind::DedekindQuadratic: return zeta_em(s) * dirichlet_L(*L.character(), s);
    case LKind::EllipticCurve: {
      if (s.real() <= 1.5) {
        throw UnsupportedError("elliptic-curve L-functions are evaluated only for Re(s) > 3/2");
      }
      Complex sum = 0.0;
      const auto& a = L.integer_coefficients();
      for (std::uint64_t n = 1; n < a.size(); ++n) {
        if (a[n] != 0) sum += a[n].get_d() * std::exp(-s * std::log(static_cast<double>(n)));
      }
      return sum;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

void require_degree_one(const LFunction& L) {
  if (L.kind() != LKind::RiemannZeta && L.kind() != LKind::Dirichlet) {
    throw UnsupportedError("completed L-functions are implemented for degree 1 only");
  }
}

Complex gamma_factor(const LFunction& L, Complex s) {
  const double n = L.conductor().get_d();
  const Complex shifted = (s + static_cast<double>(L.parity())) / 2.0;
  return std::exp(shifted * std::log(n / std::numbers::pi) + log_gamma(shifted));
}

}  // namespace

Complex completed(const LFunction& L, Complex s) {
  require_degree_one(L);
  return gamma_factor(L, s) * evaluate(L, s);
}

double z_phase(const LFunction& L, double t) {
  require_degree_one(L);
  if (!L.self_dual()) throw UnsupportedError("Z(t) is only defined here for self-dual L-functions");
  const double n = L.conductor().get_d();
  const Complex shifted = Complex(0.5 + L.parity(), t) / 2.0;
  return t / 2.0 * std::log(n / std::numbers::pi) + log_gamma(shifted).imag() - std::arg(*L.root_number()) / 2.0;
}

double z_function(const LFunction& L, double t) {
  const double theta = z_phase(L, t);
  const Complex value = std::polar(1.0, theta) * evaluate(L, Complex(0.5, t));
  return value.real();
}

}  // namespace lfdb::lfunc

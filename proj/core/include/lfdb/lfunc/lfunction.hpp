#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lfdb/arith/character.hpp"
#include "lfdb/arith/elliptic.hpp"
#include "lfdb/arith/integer.hpp"
#include "lfdb/lfunc/cyclotomic.hpp"
#include "lfdb/lfunc/euler.hpp"
#include "lfdb/lfunc/special.hpp"

namespace lfdb::lfunc {

enum class LKind { RiemannZeta, Dirichlet, DedekindQuadratic, EllipticCurve };

std::string to_string(LKind kind);
LKind kind_from_string(const std::string& name);

/// Analytic: critical line Re(s) = 1/2. Arithmetic: Re(s) = (w + 1) / 2.
enum class Normalization { Analytic, Arithmetic };

std::string to_string(Normalization n);

/// Immutable once built; construct through the factory functions below.
class LFunction {
 public:
  const std::string& label() const { return label_; }
  LKind kind() const { return kind_; }
  int degree() const { return degree_; }
  const Integer& conductor() const { return conductor_; }
  /// Inverse roots of good Euler factors have absolute value p^{w/2}.
  int weight() const { return weight_; }
  int parity() const { return parity_; }
  bool self_dual() const { return self_dual_; }
  /// Sign of the functional equation; nullopt when it is not determined (elliptic curves
  /// with additive reduction).
  std::optional<Complex> root_number() const { return root_number_; }
  Normalization normalization() const { return normalization_; }
  double critical_line() const;

  /// Largest n for which coefficient(n) is available (characters: unbounded, reported as X).
  std::uint64_t coefficient_bound() const { return bound_; }
  Complex coefficient(std::uint64_t n) const;
  /// a_1..a_X for integer-valued kinds; empty for complex characters.
  const std::vector<Integer>& integer_coefficients() const { return integer_coeffs_; }
  bool has_integer_coefficients() const { return !integer_coeffs_.empty(); }

  const std::optional<arith::DirichletCharacter>& character() const { return character_; }
  std::optional<std::int64_t> discriminant() const { return discriminant_; }

  /// Euler factors for p <= X with integer coefficients (empty for complex characters).
  const std::map<std::uint64_t, EulerFactor<Integer>>& euler_factors() const { return euler_factors_; }

  LFunction with_label(std::string label) const;

 private:
  friend LFunction riemann_zeta(std::uint64_t);
  friend LFunction dirichlet_lfunction(const arith::DirichletCharacter&, std::uint64_t);
  friend LFunction dedekind_quadratic(std::int64_t, std::uint64_t);
  friend LFunction ec_lfunction(const arith::EllipticCurveModel&, std::uint64_t);

  LFunction() = default;

  std::string label_;
  LKind kind_ = LKind::RiemannZeta;
  int degree_ = 1;
  Integer conductor_ = 1;
  int weight_ = 0;
  int parity_ = 0;
  bool self_dual_ = true;
  std::optional<Complex> root_number_ = Complex(1.0);
  Normalization normalization_ = Normalization::Analytic;
  std::uint64_t bound_ = 0;
  std::vector<Integer> integer_coeffs_;  // index 0 unused
  std::optional<arith::DirichletCharacter> character_;
  std::optional<std::int64_t> discriminant_;
  std::map<std::uint64_t, EulerFactor<Integer>> euler_factors_;
};

inline constexpr std::uint64_t kMaxCoefficientBound = 10'000'000;
inline constexpr std::uint64_t kMaxEllipticCoefficientBound = 200'000;

LFunction riemann_zeta(std::uint64_t bound);

/// chi must be primitive (the trivial character mod 1 yields zeta itself with kind Dirichlet).
LFunction dirichlet_lfunction(const arith::DirichletCharacter& chi, std::uint64_t bound);

/// zeta_K for K = Q(sqrt D): coefficients are the convolution of 1 with kronecker(D, .).
LFunction dedekind_quadratic(std::int64_t discriminant, std::uint64_t bound);

/// Degree 2, weight 1, arithmetic normalization; bad factors from ec_ap reduction types.
LFunction ec_lfunction(const arith::EllipticCurveModel& curve, std::uint64_t bound);

/// Exact character-valued expansion for a Dirichlet L-function (used as an exact check).
std::vector<CyclotomicInteger> character_coefficients(const arith::DirichletCharacter& chi, std::uint64_t bound);
std::map<std::uint64_t, EulerFactor<CyclotomicInteger>> character_euler_factors(const arith::DirichletCharacter& chi,
                                                                               std::uint64_t bound);

/// epsilon = tau(chi) / (i^a sqrt(N)) for primitive chi.
Complex dirichlet_root_number(const arith::DirichletCharacter& chi);

/// L(s). Degree 1 kinds and quadratic Dedekind zeta everywhere except poles; elliptic curves
/// only in the region of absolute convergence Re(s) > 3/2 (UnsupportedError otherwise).
Complex evaluate(const LFunction& L, Complex s);

/// Completed function for degree-1 L: pi^{-s/2} Gamma(s/2) zeta(s), or
/// (N/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi). UnsupportedError for degree >= 2.
Complex completed(const LFunction& L, Complex s);

/// Hardy-type Z(t) = e^{i theta(t)} L(1/2 + it), real for self-dual degree-1 L.
double z_function(const LFunction& L, double t);

/// theta(t) as used by z_function (branch chosen arbitrarily).
double z_phase(const LFunction& L, double t);

}  // namespace lfdb::lfunc

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace lfdb::arith {

/// e^{2 pi i exponent / order}, kept in lowest terms (order 1 means the value 1).
struct RootOfUnity {
  std::uint64_t order = 1;
  std::uint64_t exponent = 0;

  static RootOfUnity make(std::uint64_t exponent, std::uint64_t order);
  std::complex<double> to_complex() const;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// A character value: zero, or an exact root of unity.
class CharValue {
 public:
  static CharValue zero() { return CharValue(); }
  static CharValue root(RootOfUnity r) { return CharValue(r); }

  bool is_zero() const { return !root_.has_value(); }
  const RootOfUnity& root() const { return *root_; }
  /// -1, 0 or 1 for values of real characters; throws DomainError otherwise.
  int to_int() const;
  std::complex<double> to_complex() const;

  friend CharValue operator*(const CharValue& a, const CharValue& b);
  friend bool operator==(const CharValue&, const CharValue&) = default;

 private:
  CharValue() = default;
  explicit CharValue(RootOfUnity r) : root_(r) {}
  std::optional<RootOfUnity> root_;
};

/// One cyclic factor of (Z/NZ)^*, lifted to a residue mod N that is 1 on the other factors.
struct CyclicGenerator {
  std::uint64_t value = 0;
  std::uint64_t order = 0;
  std::uint64_t prime = 0;
  unsigned prime_exponent = 0;
};

/// Structure of (Z/NZ)^* from the prime-power decomposition of N. Odd p^e contribute one
/// primitive-root generator; 2^2 contributes -1; 2^k (k >= 3) contributes -1 and 5.
class CharacterGroup {
 public:
  static std::shared_ptr<const CharacterGroup> create(std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t size() const { return size_; }
  /// lcm of the generator orders.
  std::uint64_t exponent() const { return exponent_; }
  std::span<const CyclicGenerator> generators() const { return generators_; }

  /// Exponents of n with respect to generators(), or nullopt when gcd(n, N) > 1.
  std::optional<std::vector<std::uint64_t>> discrete_log(std::int64_t n) const;

 private:
  struct Component {
    std::uint64_t prime_power = 0;
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    std::size_t first_generator = 0;
    std::size_t generator_count = 0;
    std::vector<std::int64_t> log_table;  // residue mod prime_power -> log (or -1)
  };

  explicit CharacterGroup(std::uint64_t modulus);

  std::uint64_t modulus_;
  std::uint64_t size_ = 1;
  std::uint64_t exponent_ = 1;
  std::vector<CyclicGenerator> generators_;
  std::vector<Component> components_;
};

class DirichletCharacter {
 public:
  /// exponents[i] in [0, generators()[i].order).
  DirichletCharacter(std::shared_ptr<const CharacterGroup> group, std::vector<std::uint64_t> exponents);

  std::uint64_t modulus() const { return group_->modulus(); }
  const std::vector<std::uint64_t>& exponents() const { return exponents_; }
  const CharacterGroup& group() const { return *group_; }
  const std::shared_ptr<const CharacterGroup>& group_ptr() const { return group_; }

  std::uint64_t order() const { return order_; }
  /// 0 when chi(-1) = 1, 1 when chi(-1) = -1.
  int parity() const { return parity_; }
  std::uint64_t conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == modulus(); }
  bool is_principal() const { return order_ == 1; }
  bool is_real() const { return order_ <= 2; }

  CharValue operator()(std::int64_t n) const;
  DirichletCharacter conjugate() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

 private:
  std::shared_ptr<const CharacterGroup> group_;
  std::vector<std::uint64_t> exponents_;
  std::uint64_t order_ = 1;
  int parity_ = 0;
  std::uint64_t conductor_ = 1;
};

/// All phi(N) characters mod N, in lexicographic order of exponent vectors.
std::vector<DirichletCharacter> character_group(std::uint64_t modulus);

CharValue char_eval(const DirichletCharacter& chi, std::int64_t n);

struct InducingCharacter {
  std::uint64_t conductor;
  DirichletCharacter primitive;
};

InducingCharacter conductor_of(const DirichletCharacter& chi);

/// Sum over a mod N of chi(a) e^{2 pi i a / N}. Throws DomainError unless chi is primitive.
std::complex<double> gauss_sum(const DirichletCharacter& chi);

/// Position of chi in character_group(chi.modulus()), counted from 0.
std::uint64_t lexicographic_index(const DirichletCharacter& chi);
DirichletCharacter character_at(std::uint64_t modulus, std::uint64_t index);

}  // namespace lfdb::arith

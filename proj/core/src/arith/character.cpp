#include "lfdb/arith/character.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "lfdb/arith/factor.hpp"
#include "lfdb/arith/modular.hpp"
#include "lfdb/error.hpp"

namespace lfdb::arith {

namespace {

constexpr std::uint64_t kMaxModulus = 10'000'000;

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1, r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw DomainError("inverse_mod: not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t primitive_root_mod_prime(std::uint64_t p) {
  if (p == 2) return 1;
  const auto factors = factor_u64(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (const auto& [q, e] : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

// Residue mod n that is r mod q and 1 mod n/q.
std::uint64_t crt_lift(std::uint64_t r, std::uint64_t q, std::uint64_t n) {
  if (q == n) return r % n;
  const std::uint64_t rest = n / q;
  const std::uint64_t k = mul_mod((r + q - 1) % q, inverse_mod(rest % q, q), q);
  return (1 + static_cast<unsigned __int128>(rest) * k) % n;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

RootOfUnity RootOfUnity::make(std::uint64_t exponent, std::uint64_t order) {
  if (order == 0) throw DomainError("root of unity of order 0");
  exponent %= order;
  if (exponent == 0) return {1, 0};
  const std::uint64_t g = std::gcd(exponent, order);
  return {order / g, exponent / g};
}

std::complex<double> RootOfUnity::to_complex() const {
  switch (order) {
    case 1: return {1.0, 0.0};
    case 2: return {-1.0, 0.0};
    case 4: return exponent == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
    default: break;
  }
  const long double angle = 2.0L * std::numbers::pi_v<long double> * exponent / order;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

int CharValue::to_int() const {
  if (is_zero()) return 0;
  if (root_->order == 1) return 1;
  if (root_->order == 2) return -1;
  throw DomainError("character value is not real");
}

std::complex<double> CharValue::to_complex() const {
  return is_zero() ? std::complex<double>{} : root_->to_complex();
}

CharValue operator*(const CharValue& a, const CharValue& b) {
  if (a.is_zero() || b.is_zero()) return CharValue::zero();
  const std::uint64_t l = std::lcm(a.root_->order, b.root_->order);
  const std::uint64_t e = a.root_->exponent * (l / a.root_->order) + b.root_->exponent * (l / b.root_->order);
  return CharValue::root(RootOfUnity::make(e, l));
}

CharacterGroup::CharacterGroup(std::uint64_t modulus) : modulus_(modulus) {
  for (const auto& [p, e] : factor_u64(modulus)) {
    Component c;
    c.prime = p;
    c.exponent = e;
    c.prime_power = ipow(p, e);
    c.first_generator = generators_.size();
    const std::uint64_t q = c.prime_power;
    if (p == 2) {
      if (e >= 2) {
        generators_.push_back({crt_lift(q - 1, q, modulus), 2, 2, e});
      }
      if (e >= 3) {
        const std::uint64_t order = q / 4;
        generators_.push_back({crt_lift(5, q, modulus), order, 2, e});
        c.log_table.assign(q, -1);
        std::uint64_t x = 1;
        for (std::uint64_t k = 0; k < order; ++k) {
          c.log_table[x] = static_cast<std::int64_t>(k);
          x = x * 5 % q;
        }
      }
    } else {
      std::uint64_t g = primitive_root_mod_prime(p);
      if (e >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
      const std::uint64_t order = q / p * (p - 1);
      generators_.push_back({crt_lift(g, q, modulus), order, p, e});
      c.log_table.assign(q, -1);
      std::uint64_t x = 1;
      for (std::uint64_t k = 0; k < order; ++k) {
        c.log_table[x] = static_cast<std::int64_t>(k);
        x = mul_mod(x, g, q);
      }
    }
    c.generator_count = generators_.size() - c.first_generator;
    components_.push_back(std::move(c));
  }
  for (const auto& g : generators_) {
    size_ *= g.order;
    exponent_ = std::lcm(exponent_, g.order);
  }
}

std::shared_ptr<const CharacterGroup> CharacterGroup::create(std::uint64_t modulus) {
  if (modulus == 0 || modulus > kMaxModulus) {
    throw DomainError("character modulus out of range: " + std::to_string(modulus));
  }
  return std::shared_ptr<const CharacterGroup>(new CharacterGroup(modulus));
}

std::optional<std::vector<std::uint64_t>> CharacterGroup::discrete_log(std::int64_t n) const {
  const std::uint64_t r = reduce(n, modulus_);
  if (std::gcd(r, modulus_) != 1) return std::nullopt;
  std::vector<std::uint64_t> logs(generators_.size(), 0);
  for (const auto& c : components_) {
    const std::uint64_t x = r % c.prime_power;
    if (c.prime == 2) {
      if (c.exponent >= 2) {
        const bool minus = x % 4 == 3;
        logs[c.first_generator] = minus ? 1 : 0;
        if (c.exponent >= 3) {
          const std::uint64_t y = minus ? c.prime_power - x : x;
          logs[c.first_generator + 1] = static_cast<std::uint64_t>(c.log_table[y]);
        }
      }
    } else {
      logs[c.first_generator] = static_cast<std::uint64_t>(c.log_table[x]);
    }
  }
  return logs;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const CharacterGroup> group,
                                       std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto gens = group_->generators();
  if (exponents_.size() != gens.size()) {
    throw DomainError("exponent vector length does not match the generator count");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (exponents_[i] >= gens[i].order) throw DomainError("character exponent out of range");
    order_ = std::lcm(order_, gens[i].order / std::gcd(gens[i].order, exponents_[i]));
  }
  parity_ = (*this)(-1).root().order == 1 ? 0 : 1;

  conductor_ = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    const std::uint64_t o = g.order / std::gcd(g.order, exponents_[i]);
    if (g.prime != 2) {
      if (o == 1) continue;
      std::uint64_t phi = g.prime - 1, pf = g.prime;
      while (phi % o != 0) {
        phi *= g.prime;
        pf *= g.prime;
      }
      conductor_ *= pf;
    }
  }
  // the 2-part depends jointly on the -1 and 5 generators
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].prime != 2) continue;
    const std::uint64_t minus_exp = exponents_[i];
    std::uint64_t five_order = 1;
    if (i + 1 < gens.size() && gens[i + 1].prime == 2) {
      const auto& g5 = gens[i + 1];
      five_order = g5.order / std::gcd(g5.order, exponents_[i + 1]);
    }
    if (five_order > 1) {
      conductor_ *= five_order * 4;
    } else if (minus_exp != 0) {
      conductor_ *= 4;
    }
    break;
  }
}

CharValue DirichletCharacter::operator()(std::int64_t n) const {
  const auto logs = group_->discrete_log(n);
  if (!logs) return CharValue::zero();
  const auto gens = group_->generators();
  const std::uint64_t l = group_->exponent();
  unsigned __int128 e = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    e += static_cast<unsigned __int128>(exponents_[i]) * (*logs)[i] % gens[i].order * (l / gens[i].order);
  }
  return CharValue::root(RootOfUnity::make(static_cast<std::uint64_t>(e % l), l));
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<std::uint64_t> conj(exponents_.size());
  const auto gens = group_->generators();
  for (std::size_t i = 0; i < conj.size(); ++i) conj[i] = (gens[i].order - exponents_[i]) % gens[i].order;
  return DirichletCharacter(group_, std::move(conj));
}

std::uint64_t lexicographic_index(const DirichletCharacter& chi) {
  std::uint64_t index = 0;
  const auto gens = chi.group().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) index = index * gens[i].order + chi.exponents()[i];
  return index;
}

namespace {

DirichletCharacter character_at(const std::shared_ptr<const CharacterGroup>& group, std::uint64_t index) {
  if (index >= group->size()) {
    throw DomainError("character index " + std::to_string(index) + " out of range mod " +
                      std::to_string(group->modulus()));
  }
  const auto gens = group->generators();
  std::vector<std::uint64_t> exps(gens.size());
  for (std::size_t i = gens.size(); i-- > 0;) {
    exps[i] = index % gens[i].order;
    index /= gens[i].order;
  }
  return DirichletCharacter(group, std::move(exps));
}

}  // namespace

DirichletCharacter character_at(std::uint64_t modulus, std::uint64_t index) {
  return character_at(CharacterGroup::create(modulus), index);
}

std::vector<DirichletCharacter> character_group(std::uint64_t modulus) {
  const auto group = CharacterGroup::create(modulus);
  std::vector<DirichletCharacter> out;
  out.reserve(group->size());
  for (std::uint64_t i = 0; i < group->size(); ++i) out.push_back(character_at(group, i));
  return out;
}

CharValue char_eval(const DirichletCharacter& chi, std::int64_t n) { return chi(n); }

InducingCharacter conductor_of(const DirichletCharacter& chi) {
  const std::uint64_t f = chi.conductor();
  if (f == chi.modulus()) return {f, chi};
  const auto group = CharacterGroup::create(f);
  const auto gens = group->generators();
  std::vector<std::uint64_t> exps(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::uint64_t n = gens[i].value;
    while (std::gcd(n, chi.modulus()) != 1) n += f;
    const CharValue v = chi(static_cast<std::int64_t>(n));
    const RootOfUnity& r = v.root();
    if (gens[i].order % r.order != 0) throw std::logic_error("conductor_of: inconsistent character value");
    exps[i] = r.exponent * (gens[i].order / r.order);
  }
  return {f, DirichletCharacter(group, std::move(exps))};
}

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
  if (!chi.is_primitive()) throw DomainError("gauss_sum requires a primitive character");
  const std::uint64_t n = chi.modulus();
  long double re = 0, im = 0;
  for (std::uint64_t a = 0; a < n; ++a) {
    const CharValue v = chi(static_cast<std::int64_t>(a));
    if (v.is_zero()) continue;
    const auto& r = v.root();
    // reduce the angle exactly as a fraction with denominator lcm(order, n)
    const std::uint64_t l = std::lcm(r.order, n);
    const std::uint64_t num = (r.exponent * (l / r.order) + a * (l / n)) % l;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * num / l;
    re += std::cos(angle);
    im += std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace lfdb::arith

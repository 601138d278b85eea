#include "lfdb/lfunc/cyclotomic.hpp"

#include <complex>
#include <numbers>
#include <sstream>

#include "lfdb/error.hpp"

namespace lfdb::lfunc {

CyclotomicInteger::CyclotomicInteger(std::uint64_t order) : coeffs_(order == 0 ? 1 : order, 0) {}

CyclotomicInteger CyclotomicInteger::from_char_value(const arith::CharValue& v, std::uint64_t order) {
  CyclotomicInteger out(order);
  if (v.is_zero()) return out;
  const auto& r = v.root();
  if (order % r.order != 0) throw DomainError("character value order does not divide the ring order");
  out.coeffs_[r.exponent * (order / r.order)] = 1;
  return out;
}

CyclotomicInteger CyclotomicInteger::constant(std::int64_t c, std::uint64_t order) {
  CyclotomicInteger out(order);
  out.coeffs_[0] = c;
  return out;
}

bool CyclotomicInteger::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::complex<double> CyclotomicInteger::to_complex() const {
  std::complex<double> sum;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    sum += static_cast<double>(coeffs_[k]) * arith::RootOfUnity::make(k, coeffs_.size()).to_complex();
  }
  return sum;
}

std::string CyclotomicInteger::to_string() const {
  std::ostringstream out;
  bool first = true;
  const std::uint64_t m = coeffs_.size();
  for (std::size_t k = 0; k < m; ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    auto root = arith::RootOfUnity::make(k, m);
    // zeta^(m/2) = -1 prints as an integer
    if (root.order == 2) {
      c = -c;
      root = {1, 0};
    }
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (root.order == 1) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "e(" << root.exponent << "/" << root.order << ")";
    }
    first = false;
  }
  return first ? "0" : out.str();
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
  if (o.order() != order()) throw DomainError("cyclotomic order mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& o) {
  if (o.order() != order()) throw DomainError("cyclotomic order mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

CyclotomicInteger operator-(CyclotomicInteger a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.order() != b.order()) throw DomainError("cyclotomic order mismatch");
  const std::uint64_t m = a.order();
  CyclotomicInteger out(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b.coeffs_[j] == 0) continue;
      out.coeffs_[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

}  // namespace lfdb::lfunc

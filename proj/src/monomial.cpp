#include "pizza/monomial.hpp"

#include <string>

#include "pizza/error.hpp"

namespace pizza {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

void check_exponent(int e) {
  if (e < 0 || e > kMaxExponent)
    throw Error("monomial exponent " + std::to_string(e) + " outside [0, " +
                std::to_string(kMaxExponent) + "]");
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxArity)
    throw ArityMismatch("monomial arity " + std::to_string(exponents.size()) + " exceeds " +
                        std::to_string(kMaxArity));
  int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    check_exponent(exponents[i]);
    exps_[i] = static_cast<std::uint8_t>(exponents[i]);
    total += exponents[i];
  }
  degree_ = static_cast<std::uint16_t>(total);
}

Monomial Monomial::variable(std::size_t index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int exponent) {
  if (i >= kMaxArity) throw ArityMismatch("monomial index out of range");
  check_exponent(exponent);
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + exponent);
  exps_[i] = static_cast<std::uint8_t>(exponent);
}

std::size_t Monomial::support_end() const {
  std::size_t end = kMaxArity;
  while (end > 0 && exps_[end - 1] == 0) --end;
  return end;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxArity; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxArity; ++i) {
    const int e = exps_[i] + rhs.exps_[i];
    if (e > kMaxExponent) throw Error("monomial exponent overflow");
    out.exps_[i] = static_cast<std::uint8_t>(e);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ + rhs.degree_);
  return out;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxArity; ++i)
    out.exps_[i] = static_cast<std::uint8_t>(exps_[i] - rhs.exps_[i]);
  out.degree_ = static_cast<std::uint16_t>(degree_ - rhs.degree_);
  return out;
}

std::uint64_t Monomial::hash() const {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::memcpy(&lo, exps_.data(), 8);
  std::memcpy(&hi, exps_.data() + 8, 8);
  return mix(lo ^ mix(hi + 0x9e3779b97f4a7c15ULL));
}

}  // namespace pizza

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>

namespace pizza {

/// Largest number of variables a polynomial may carry. The target
/// computations need at most 11 (type A_10).
inline constexpr std::size_t kMaxArity = 16;
/// Largest exponent a single variable may carry.
inline constexpr int kMaxExponent = 255;

/// Dense exponent vector with a cached total degree. Unused trailing slots are
/// zero, so two monomials of the same polynomial compare equal iff their
/// exponents agree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, int power = 1);
  /// Trusted construction on hot paths: `exps` holds kMaxArity entries that
  /// sum to `degree`.
  static Monomial from_raw(const std::array<std::uint8_t, kMaxArity>& exps, int degree) {
    Monomial m;
    m.exps_ = exps;
    m.degree_ = static_cast<std::uint16_t>(degree);
    return m;
  }

  int operator[](std::size_t i) const { return exps_[i]; }
  int degree() const { return degree_; }
  void set(std::size_t i, int exponent);

  /// Index one past the last nonzero exponent.
  std::size_t support_end() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& rhs) const;
  /// Requires divides(*this, ...). Callers check with divides() first.
  Monomial operator/(const Monomial& rhs) const;

  std::uint64_t hash() const;
  const std::uint8_t* data() const { return exps_.data(); }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.exps_.data(), b.exps_.data(), kMaxArity) == 0;
  }
  /// Graded lexicographic order with x1 > x2 > ... > xn.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    const int c = std::memcmp(a.exps_.data(), b.exps_.data(), kMaxArity);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  std::array<std::uint8_t, kMaxArity> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return static_cast<std::size_t>(m.hash()); }
};

}  // namespace pizza

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace relhilb {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of fixed arity. Unused slots stay zero, so equality and hashing
/// can look at the whole array.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  /// x_index in a ring of the given arity.
  static Monomial variable(std::size_t arity, std::size_t index, unsigned power = 1);

  std::size_t arity() const { return arity_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  bool is_one() const { return degree_ == 0; }
  /// Bit i set iff x_i occurs; used as a cheap divisibility pre-filter.
  std::uint32_t support_mask() const { return mask_; }

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < arity_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }
  /// Single variable index if this is a pure power x_i^e (e >= 1), else -1.
  int pure_power_variable() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  /// Inserts `count` zero exponents in front (used for auxiliary variables).
  Monomial shifted(std::size_t count) const;
  /// Drops the first `count` exponents; they must be zero.
  Monomial unshifted(std::size_t count) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.arity_ == b.arity_ && a.exps_ == b.exps_;
  }
  std::size_t hash() const;

 private:
  void refresh();
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t arity_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace relhilb

#pragma once

#include <string>

#include "relhilb/monomial.hpp"

namespace relhilb {

/// Term orders. The three global kinds are well-orders with 1 smallest. `local_degrevlex`
/// ranks lower total degree *higher* (ties broken by degrevlex); it is only used inside
/// m-adically truncated computations, where it is a well-order on the finite monomial set.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex, block, local_degrevlex };

  constexpr MonomialOrder() = default;
  static constexpr MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  /// Eliminates the first k variables: block degrevlex on x_0..x_{k-1}, then degrevlex on the rest.
  static constexpr MonomialOrder block(unsigned k) { return MonomialOrder(Kind::block, k); }
  static constexpr MonomialOrder local_degrevlex() { return MonomialOrder(Kind::local_degrevlex, 0); }

  Kind kind() const { return kind_; }
  unsigned block_size() const { return block_; }
  bool is_global() const { return kind_ != Kind::local_degrevlex; }

  /// Negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;
  friend constexpr bool operator==(MonomialOrder a, MonomialOrder b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  constexpr MonomialOrder(Kind kind, unsigned block) : kind_(kind), block_(block) {}
  Kind kind_ = Kind::degrevlex;
  unsigned block_ = 0;
};

}  // namespace relhilb

#include "relhilb/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "relhilb/errors.hpp"

namespace relhilb {

Monomial::Monomial(std::size_t arity) {
  if (arity > kMaxVariables)
    throw ValidationError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  arity_ = static_cast<std::uint8_t>(arity);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) exps_[i++] = static_cast<Exponent>(e);
  refresh();
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, unsigned power) {
  Monomial m(arity);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > std::numeric_limits<Exponent>::max()) throw ValidationError("exponent overflow");
  exps_[i] = static_cast<Exponent>(e);
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < arity_; ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) mask_ |= (1u << i);
  }
}

int Monomial::pure_power_variable() const {
  if (degree_ == 0 || (mask_ & (mask_ - 1)) != 0) return -1;
  for (std::size_t i = 0; i < arity_; ++i)
    if (exps_[i] != 0) return static_cast<int>(i);
  return -1;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < arity_; ++i) {
    unsigned e = static_cast<unsigned>(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw ValidationError("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  r.mask_ = mask_ | other.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::shifted(std::size_t count) const {
  Monomial r(arity_ + count);
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i + count] = exps_[i];
  r.refresh();
  return r;
}

Monomial Monomial::unshifted(std::size_t count) const {
  Monomial r(arity_ - count);
  for (std::size_t i = count; i < arity_; ++i) r.exps_[i - count] = exps_[i];
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL ^ arity_;
  for (std::size_t i = 0; i < arity_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace relhilb

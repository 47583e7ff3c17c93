#include "relhilb/polynomial.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "relhilb/errors.hpp"

namespace relhilb {

Polynomial::Polynomial(std::size_t arity, MonomialOrder order) : arity_(arity), order_(order) {
  if (arity > kMaxVariables)
    throw ValidationError("at most " + std::to_string(kMaxVariables) + " variables are supported");
}

Polynomial Polynomial::constant(std::size_t arity, const BigRational& c, MonomialOrder order) {
  Polynomial p(arity, order);
  if (!c.is_zero()) p.terms_.push_back({Monomial(arity), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index, MonomialOrder order) {
  return term(Monomial::variable(arity, index), BigRational(1), order);
}

Polynomial Polynomial::term(const Monomial& m, const BigRational& c, MonomialOrder order) {
  Polynomial p(m.arity(), order);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_sorted(std::size_t arity, std::vector<Term> terms, MonomialOrder order) {
  Polynomial p(arity, order);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::from_terms(std::size_t arity, std::vector<Term> terms, MonomialOrder order) {
  Polynomial p(arity, order);
  for (const Term& t : terms)
    if (t.monomial.arity() != arity) throw ArityMismatch("term arity differs from polynomial arity");
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
  return terms_.front();
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

unsigned Polynomial::lowest_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = terms_.front().monomial.degree();
  for (const Term& t : terms_) d = std::min(d, t.monomial.degree());
  return d;
}

BigRational Polynomial::constant_term() const {
  for (const Term& t : terms_)
    if (t.monomial.is_one()) return t.coeff;
  return BigRational(0);
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  Polynomial p(arity_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(),
            [order](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return p;
}

Polynomial Polynomial::truncated(unsigned bound) const {
  Polynomial p(arity_, order_);
  for (const Term& t : terms_)
    if (t.monomial.degree() < bound) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  BigRational inv = BigRational(1) / terms_.front().coeff;
  return scaled(inv);
}

Polynomial Polynomial::scaled(const BigRational& c) const {
  Polynomial p(arity_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.monomial, t.coeff * c});
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const BigRational& c) const {
  Polynomial p(arity_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::times_truncated(const Polynomial& other, unsigned bound) const {
  check_compatible(other);
  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      if (bound != 0 && a.monomial.degree() + b.monomial.degree() >= bound) continue;
      acc[a.monomial * b.monomial] += a.coeff * b.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  return from_terms(arity_, std::move(out), order_);
}

Polynomial Polynomial::shifted(std::size_t count) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({t.monomial.shifted(count), t.coeff});
  return from_terms(arity_ + count, std::move(out), order_);
}

Polynomial Polynomial::unshifted(std::size_t count) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({t.monomial.unshifted(count), t.coeff});
  return from_terms(arity_ - count, std::move(out), order_);
}

bool Polynomial::involves_first(std::size_t count) const {
  std::uint32_t mask = count >= 32 ? ~0u : ((1u << count) - 1);
  for (const Term& t : terms_)
    if ((t.monomial.support_mask() & mask) != 0) return true;
  return false;
}

Polynomial Polynomial::operator-() const { return scaled(BigRational(-1)); }

void Polynomial::check_compatible(const Polynomial& other) const {
  if (arity_ != other.arity_)
    throw ArityMismatch("arity " + std::to_string(arity_) + " vs " + std::to_string(other.arity_));
}

void Polynomial::add_scaled_shifted(const Polynomial& b, const BigRational& c, const Monomial& m,
                                    unsigned bound) {
  if (c.is_zero() || b.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto it = terms_.begin();
  for (const Term& bt : b.terms_) {
    Monomial bm = bt.monomial * m;
    if (bound != 0 && bm.degree() >= bound) {
      if (!order_.is_global()) break;  // remaining terms have even higher degree
      continue;
    }
    while (it != terms_.end() && order_.greater(it->monomial, bm)) out.push_back(std::move(*it++));
    if (it != terms_.end() && it->monomial == bm) {
      BigRational s = it->coeff + bt.coeff * c;
      if (!s.is_zero()) out.push_back({std::move(bm), std::move(s)});
      ++it;
    } else {
      out.push_back({std::move(bm), bt.coeff * c});
    }
  }
  for (; it != terms_.end(); ++it) out.push_back(std::move(*it));
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  const Polynomial& o = other.order_ == order_ ? other : other.with_order(order_);
  add_scaled_shifted(o, BigRational(1), Monomial(arity_), 0);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  const Polynomial& o = other.order_ == order_ ? other : other.with_order(order_);
  add_scaled_shifted(o, BigRational(-1), Monomial(arity_), 0);
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.with_order(a.order_).terms_;
}

std::size_t Polynomial::hash() const {
  // Order-independent: xor-combine per-term hashes.
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ arity_;
  for (const Term& t : terms_) h ^= (t.monomial.hash() * 31 + t.coeff.hash()) * 0x100000001b3ULL;
  return h;
}

Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g) {
  if (f.arity() != g.arity())
    throw ArityMismatch("arity " + std::to_string(f.arity()) + " vs " + std::to_string(g.arity()));
  switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
  }
  return f;
}

std::pair<Monomial, BigRational> leading_term(const Polynomial& f, MonomialOrder order) {
  Polynomial sorted = f.with_order(order);
  const Term& t = sorted.leading();
  return {t.monomial, t.coeff};
}

}  // namespace relhilb

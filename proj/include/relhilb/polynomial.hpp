#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "relhilb/monomial.hpp"
#include "relhilb/monomial_order.hpp"
#include "relhilb/rational.hpp"

namespace relhilb {

struct Term {
  Monomial monomial;
  BigRational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial over Q in a fixed number of variables. Terms are kept sorted with the
/// leading term (order-maximal) first and never carry a zero coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t arity, MonomialOrder order = MonomialOrder::degrevlex());

  static Polynomial constant(std::size_t arity, const BigRational& c,
                             MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial variable(std::size_t arity, std::size_t index,
                             MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial term(const Monomial& m, const BigRational& c,
                         MonomialOrder order = MonomialOrder::degrevlex());
  /// Trusted constructor: `terms` must already be sorted by `order`, distinct and nonzero.
  static Polynomial from_sorted(std::size_t arity, std::vector<Term> terms, MonomialOrder order);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(std::size_t arity, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::degrevlex());

  std::size_t arity() const { return arity_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Throws ZeroPolynomial on the zero polynomial.
  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().monomial; }
  const BigRational& leading_coeff() const { return leading().coeff; }

  unsigned total_degree() const;
  /// Lowest total degree of a term (the m-adic order); 0 for the zero polynomial.
  unsigned lowest_degree() const;
  BigRational constant_term() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial with_order(MonomialOrder order) const;
  /// Drops every term of total degree >= bound.
  Polynomial truncated(unsigned bound) const;
  Polynomial monic() const;
  Polynomial scaled(const BigRational& c) const;
  Polynomial times_term(const Monomial& m, const BigRational& c) const;
  /// Product with truncation applied on the fly (bound 0 means none).
  Polynomial times_truncated(const Polynomial& other, unsigned bound) const;

  Polynomial shifted(std::size_t count) const;
  Polynomial unshifted(std::size_t count) const;
  bool involves_first(std::size_t count) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.times_truncated(b, 0); }

  /// Equality of the underlying polynomials, independent of the stored order.
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  std::size_t hash() const;

  /// In-place a <- a + c * m * b, truncating at `bound` (0 = none). Orders must agree.
  void add_scaled_shifted(const Polynomial& b, const BigRational& c, const Monomial& m, unsigned bound);

 private:
  void check_compatible(const Polynomial& other) const;
  std::size_t arity_ = 0;
  MonomialOrder order_ = MonomialOrder::degrevlex();
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

/// Exact ring operation; throws ArityMismatch if the arities differ.
Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g);

/// Order-maximal term of f under `order`; throws ZeroPolynomial when f = 0.
std::pair<Monomial, BigRational> leading_term(const Polynomial& f, MonomialOrder order);

struct PolynomialHash {
  std::size_t operator()(const Polynomial& p) const { return p.hash(); }
};

}  // namespace relhilb

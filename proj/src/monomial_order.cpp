#include "relhilb/monomial_order.hpp"

namespace relhilb {

namespace {

// Degrevlex restricted to variables [begin, end).
int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  unsigned da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int revlex_tiebreak(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::degrevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return revlex_tiebreak(a, b);
    case Kind::lex:
      for (std::size_t i = 0; i < a.arity(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::block: {
      int c = degrevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return degrevlex_range(a, b, block_, a.arity());
    }
    case Kind::local_degrevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      return revlex_tiebreak(a, b);
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::degrevlex: return "degrevlex";
    case Kind::lex: return "lex";
    case Kind::block: return "block(" + std::to_string(block_) + ")";
    case Kind::local_degrevlex: return "local_degrevlex";
  }
  return "?";
}

}  // namespace relhilb

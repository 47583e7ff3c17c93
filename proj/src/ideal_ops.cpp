#include <algorithm>

#include "relhilb/errors.hpp"
#include "relhilb/local_ideal.hpp"

namespace relhilb {

namespace {

void same_ring(const Ideal& K, const Ideal& L) {
  if (K.ring() != L.ring()) throw ValidationError("ideals live in different rings");
}

std::shared_ptr<const LocalQuotient> try_quotient(const Ideal& K) {
  try {
    return local_quotient(K);
  } catch (const CapExceeded&) {
    return nullptr;
  }
}

// Kernel of A/floor -> (A/K)^k, f -> (f*l_1, ..., f*l_k), lifted to polynomials.
std::vector<Polynomial> colon_kernel(const LocalQuotient& domain, const LocalQuotient& target,
                                     const std::vector<Polynomial>& multipliers, std::size_t arity) {
  std::vector<SparseVector> images;
  images.reserve(domain.length());
  for (const Monomial& b : domain.standard_monomials()) {
    Polynomial bp = Polynomial::term(b, BigRational(1));
    SparseVector row;
    for (std::size_t j = 0; j < multipliers.size(); ++j) {
      std::size_t offset = j * target.length();
      for (auto& [i, c] : target.coordinates(bp * multipliers[j])) row.emplace_back(offset + i, std::move(c));
    }
    images.push_back(std::move(row));
  }
  std::vector<Polynomial> out;
  for (const SparseVector& v : left_kernel(images)) out.push_back(domain.from_coordinates(v, arity));
  return out;
}

std::vector<Polynomial> with_relations(const Ideal& K) {
  std::vector<Polynomial> out = K.ring()->relations();
  out.insert(out.end(), K.generators().begin(), K.generators().end());
  return out;
}

// Generators of P ∩ Q in the polynomial ring via t*P + (1-t)*Q.
std::vector<Polynomial> intersect_polys(const std::vector<Polynomial>& P, const std::vector<Polynomial>& Q,
                                        std::size_t arity) {
  Polynomial t = Polynomial::variable(arity + 1, 0);
  Polynomial one_minus_t = Polynomial::constant(arity + 1, BigRational(1)) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& p : P) gens.push_back(t * p.shifted(1));
  for (const Polynomial& q : Q) gens.push_back(one_minus_t * q.shifted(1));
  return eliminate(gens, 1);
}

}  // namespace

Ideal ideal_colon(const Ideal& K, const Ideal& L) {
  same_ring(K, L);
  if (L.is_zero()) return Ideal::unit(K.ring()).with_note("colon by the zero ideal");
  if (try_quotient(K)) return ideal_colon(K, L, K);
  return ideal_colon_global(K, L);
}

Ideal ideal_colon(const Ideal& K, const Ideal& L, const Ideal& floor) {
  same_ring(K, L);
  if (L.is_zero()) return Ideal::unit(K.ring()).with_note("colon by the zero ideal");
  auto qk = local_quotient(K);
  auto qf = local_quotient(floor);
  std::vector<Polynomial> kernel = colon_kernel(*qf, *qk, L.generators(), K.ring()->arity());
  if (kernel.empty()) return floor;
  return Ideal::extend(floor, std::move(kernel));
}

Ideal ideal_intersect(const Ideal& K, const Ideal& L) {
  same_ring(K, L);
  auto qk = try_quotient(K);
  auto ql = try_quotient(L);
  if (!qk || !ql) return ideal_intersect_global(K, L);
  Ideal floor = ideal_product(K, L);
  auto qf = local_quotient(floor);
  std::vector<SparseVector> images;
  images.reserve(qf->length());
  for (const Monomial& b : qf->standard_monomials()) {
    Polynomial bp = Polynomial::term(b, BigRational(1));
    SparseVector row = qk->coordinates(bp);
    for (auto& [i, c] : ql->coordinates(bp)) row.emplace_back(qk->length() + i, std::move(c));
    images.push_back(std::move(row));
  }
  std::vector<Polynomial> kernel;
  for (const SparseVector& v : left_kernel(images)) kernel.push_back(qf->from_coordinates(v, K.ring()->arity()));
  if (kernel.empty()) return floor;
  return Ideal::extend(floor, std::move(kernel));
}

Ideal ideal_intersect_global(const Ideal& K, const Ideal& L) {
  same_ring(K, L);
  return Ideal(K.ring(), intersect_polys(with_relations(K), with_relations(L), K.ring()->arity()));
}

Ideal ideal_colon_global(const Ideal& K, const Ideal& L) {
  same_ring(K, L);
  if (L.is_zero()) return Ideal::unit(K.ring()).with_note("colon by the zero ideal");
  const std::size_t n = K.ring()->arity();
  std::vector<Polynomial> acc;
  bool first = true;
  for (const Polynomial& l : L.generators()) {
    std::vector<Polynomial> quotient;
    for (const Polynomial& p : intersect_polys(with_relations(K), {l}, n)) quotient.push_back(exact_divide(p, l));
    if (first) {
      acc = std::move(quotient);
      first = false;
    } else {
      acc = intersect_polys(acc, quotient, n);
    }
  }
  return Ideal(K.ring(), std::move(acc));
}

bool local_contains(const Ideal& K, const Polynomial& f) {
  if (auto q = try_quotient(K)) return q->contains(f);
  if (K.ring()->reduce(f).is_zero()) return true;
  Ideal colon = ideal_colon_global(K, Ideal(K.ring(), {f}));
  return colon.is_unit();
}

bool local_contains(const Ideal& K, const Ideal& L) {
  same_ring(K, L);
  if (auto q = try_quotient(K)) {
    return std::all_of(L.generators().begin(), L.generators().end(),
                       [&q](const Polynomial& g) { return q->contains(g); });
  }
  return std::all_of(L.generators().begin(), L.generators().end(),
                     [&K](const Polynomial& g) { return local_contains(K, g); });
}

bool local_equal(const Ideal& K, const Ideal& L) {
  same_ring(K, L);
  if (K.same_generators(L)) return true;
  auto qk = try_quotient(K);
  auto ql = try_quotient(L);
  if (qk && ql) return qk->length() == ql->length() && local_contains(L, K);
  if (static_cast<bool>(qk) != static_cast<bool>(ql)) return false;
  return local_contains(K, L) && local_contains(L, K);
}

}  // namespace relhilb

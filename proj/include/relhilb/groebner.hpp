#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "relhilb/polynomial.hpp"

namespace relhilb {

/// Reduced Groebner basis. With `truncation` N > 0 the basis lives in the truncated
/// algebra Q[x]/m^N under the local order: every term of degree >= N is zero there,
/// and the basis generates (input) + m^N.
struct GroebnerBasis {
  std::vector<Polynomial> generators;  // monic, interreduced, sorted by leading monomial
  MonomialOrder order;
  unsigned truncation = 0;
  std::size_t arity = 0;
  std::uint64_t fingerprint = 0;

  bool is_zero_ideal() const { return generators.empty(); }
  bool is_unit_ideal() const;
};

/// Buchberger's algorithm with the coprime and chain (Gebauer-Moeller) criteria and the
/// normal selection strategy. Zero generators are discarded; an empty input yields the
/// empty basis. Results are memoized by fingerprint. A local order requires truncation > 0.
GroebnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrder order,
                         unsigned truncation = 0);

/// Fully reduced remainder of f; zero iff f lies in the ideal (plus m^N when truncated).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// S-polynomial of two monic polynomials sharing an order, truncated at `truncation` if set.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, unsigned truncation = 0);

/// True iff every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

struct StandardMonomialCount {
  bool infinite = false;
  std::size_t count = 0;
  friend bool operator==(const StandardMonomialCount&, const StandardMonomialCount&) = default;
};

/// Number of monomials outside the leading-term ideal (below the truncation degree when
/// truncated). INFINITE iff, for a global order, some variable has no pure power among
/// the leading terms.
StandardMonomialCount count_standard_monomials(const GroebnerBasis& gb);

/// The standard monomials themselves, by increasing degree; throws ValidationError if infinite.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

/// Generators of (gens) ∩ Q[x_k, ..., x_{n-1}], returned in the ring of the remaining
/// variables (arity n - k).
std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, unsigned k);

/// Exact quotient f / g in the global order of f; throws ValidationError if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Memo table shared by every Groebner computation. Safe for concurrent use.
class GroebnerCache {
 public:
  static GroebnerCache& instance();
  ~GroebnerCache();
  void clear();
  std::size_t size() const;
  std::size_t hits() const;
  std::size_t misses() const;
  void set_enabled(bool enabled);

 private:
  friend GroebnerBasis buchberger(std::span<const Polynomial>, MonomialOrder, unsigned);
  struct Impl;
  GroebnerCache();
  std::unique_ptr<Impl> impl_;
};

}  // namespace relhilb

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relhilb/groebner.hpp"
#include "relhilb/linear_algebra.hpp"
#include "relhilb/polynomial.hpp"

namespace relhilb {

/// A = Q[x_1..x_n]/a, always read in the localization at m = (x_1..x_n).
class RingPresentation {
 public:
  /// Throws ValidationError if a relation has a nonzero constant term.
  RingPresentation(std::string label, std::vector<std::string> variables, std::vector<Polynomial> relations,
                   unsigned dim, bool gorenstein = false);

  static std::shared_ptr<const RingPresentation> create(std::string label, std::vector<std::string> variables,
                                                        const std::vector<std::string>& relations, unsigned dim,
                                                        bool gorenstein = false);

  const std::string& label() const { return label_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  unsigned dim() const { return dim_; }
  bool gorenstein() const { return gorenstein_; }
  std::size_t arity() const { return variables_.size(); }

  Polynomial parse(std::string_view text) const;
  std::string format(const Polynomial& f) const;
  Polynomial variable(std::size_t index) const;
  /// Normal form modulo the global degrevlex basis of the relations.
  Polynomial reduce(const Polynomial& f) const;
  const GroebnerBasis& relation_basis() const { return relation_basis_; }

 private:
  std::string label_;
  std::vector<std::string> variables_;
  std::vector<Polynomial> relations_;
  unsigned dim_;
  bool gorenstein_;
  GroebnerBasis relation_basis_;
};

using Ring = std::shared_ptr<const RingPresentation>;

/// User assertions; never computed.
struct IdealFlags {
  std::optional<bool> integrally_closed;
  std::optional<bool> asymptotically_normal;
};

/// Finitely generated ideal of A. Cheap to copy. Besides its generators a handle may
/// remember how it was built (a product of powers, or a known subideal plus extra
/// generators); the local engine uses that to pick certified truncation degrees.
class Ideal {
 public:
  struct Factor;
  struct Data;

  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> generators, IdealFlags flags = {}, std::string name = {});

  static Ideal parse(Ring ring, const std::vector<std::string>& generators, IdealFlags flags = {},
                     std::string name = {});
  static Ideal maximal(Ring ring);
  static Ideal unit(Ring ring);
  /// The ideal `floor` + (extra); `floor` must be m-primary for the fast path to apply.
  static Ideal extend(const Ideal& floor, std::vector<Polynomial> extra, std::string name = {});

  bool valid() const { return data_ != nullptr; }
  const Ring& ring() const;
  const std::vector<Polynomial>& generators() const;
  const IdealFlags& flags() const;
  const std::string& name() const;
  const std::string& note() const;
  std::uint64_t key() const;
  bool is_zero() const { return generators().empty(); }
  /// True iff some generator has a nonzero constant term.
  bool is_unit() const;

  Ideal named(std::string name) const;
  Ideal with_flags(IdealFlags flags) const;
  Ideal with_note(std::string note) const;

  const std::vector<Factor>& factors() const;
  const Ideal* floor() const;
  const std::vector<Polynomial>& extra() const;

  std::string to_string() const;
  /// Same ring and the same sorted generator list (a syntactic test; see local_equal).
  bool same_generators(const Ideal& other) const;

 private:
  explicit Ideal(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  friend Ideal ideal_product(const Ideal&, const Ideal&);
  friend Ideal ideal_power(const Ideal&, unsigned);
  std::shared_ptr<const Data> data_;
};

struct Ideal::Factor {
  Ideal base;
  unsigned exponent;
};

struct LocalLength {
  bool infinite = false;
  std::size_t value = 0;
  unsigned stabilized_at = 0;
};

/// Process-wide knobs of the local engine.
struct LocalSettings {
  unsigned length_cap = 64;
};
LocalSettings& local_settings();

/// A/K for m-primary K, as the standard monomials of a local basis of a + K + m^N with
/// N chosen so that m^(N-1) lies in a + K locally.
class LocalQuotient {
 public:
  LocalQuotient(GroebnerBasis basis, std::vector<Monomial> standard);

  std::size_t length() const { return standard_.size(); }
  unsigned truncation() const { return basis_.truncation; }
  /// Least b with every monomial of degree b in a + K locally.
  unsigned power_bound() const { return power_bound_; }
  const GroebnerBasis& basis() const { return basis_; }
  const std::vector<Monomial>& standard_monomials() const { return standard_; }

  /// Local normal form, expressed in standard monomials.
  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  SparseVector coordinates(const Polynomial& f) const;
  /// Polynomial sum of coeff * standard monomial, in the default order.
  Polynomial from_coordinates(const SparseVector& v, std::size_t arity) const;

 private:
  GroebnerBasis basis_;
  std::vector<Monomial> standard_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  unsigned power_bound_ = 0;
};

/// Throws CapExceeded if no certified truncation exists below the length cap.
std::shared_ptr<const LocalQuotient> local_quotient(const Ideal& K);
void clear_local_cache();

LocalLength local_length(const Ideal& K);
/// λ(A/K); throws CapExceeded when K is not m-primary (or the cap is too small).
std::size_t length(const Ideal& K);

Ideal ideal_sum(const Ideal& K, const Ideal& L);
Ideal ideal_product(const Ideal& K, const Ideal& L);
Ideal ideal_power(const Ideal& K, unsigned n);
/// (K :_A L). Linear algebra over A/K when K is m-primary, the elimination route otherwise.
Ideal ideal_colon(const Ideal& K, const Ideal& L);
/// Same, given an m-primary `floor` already known to lie in (K : L).
Ideal ideal_colon(const Ideal& K, const Ideal& L, const Ideal& floor);
Ideal ideal_intersect(const Ideal& K, const Ideal& L);

/// Elimination routes in the polynomial ring: t-trick intersection and colon by
/// exact division. Correct for every ideal; used as fallbacks and cross-checks.
Ideal ideal_intersect_global(const Ideal& K, const Ideal& L);
Ideal ideal_colon_global(const Ideal& K, const Ideal& L);

bool local_contains(const Ideal& K, const Polynomial& f);
/// L ⊆ K locally.
bool local_contains(const Ideal& K, const Ideal& L);
bool local_equal(const Ideal& K, const Ideal& L);

}  // namespace relhilb

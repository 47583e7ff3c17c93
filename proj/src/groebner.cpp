#include "relhilb/groebner.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "relhilb/errors.hpp"

namespace relhilb {

namespace {

// Total preorder on monomials used for pair selection: lower degree first in local
// mode (the truncated algebra is filtered by degree), the term order itself otherwise.
struct SelectionKey {
  MonomialOrder order;
  bool less(const Monomial& a, const Monomial& b) const {
    if (order.is_global()) return order.compare(a, b) < 0;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order.compare(a, b) > 0;
  }
};

// Division by a set of monic polynomials. `find` returns the reducer for a monomial or nullptr.
template <typename Finder>
Polynomial reduce_terms(const Polynomial& f, Finder&& find, unsigned truncation, bool full) {
  const MonomialOrder order = f.order();
  std::vector<Term> rem;
  std::vector<Term> work;
  work.reserve(f.size());
  for (const Term& t : f.terms())
    if (truncation == 0 || t.monomial.degree() < truncation) work.push_back(t);
  std::size_t head = 0;
  std::vector<Term> merged;
  while (head < work.size()) {
    const Polynomial* g = find(work[head].monomial);
    if (g == nullptr) {
      if (!full) {
        for (; head < work.size(); ++head) rem.push_back(std::move(work[head]));
        break;
      }
      rem.push_back(std::move(work[head]));
      ++head;
      continue;
    }
    const BigRational c = -work[head].coeff;  // reducers are monic
    const Monomial mult = work[head].monomial / g->leading_monomial();
    merged.clear();
    merged.reserve(work.size() - head + g->size());
    auto it = work.begin() + static_cast<std::ptrdiff_t>(head + 1);
    const auto& gt = g->terms();
    for (std::size_t k = 1; k < gt.size(); ++k) {
      Monomial m = gt[k].monomial * mult;
      if (truncation != 0 && m.degree() >= truncation) {
        if (!order.is_global()) break;
        continue;
      }
      while (it != work.end() && order.greater(it->monomial, m)) merged.push_back(std::move(*it++));
      if (it != work.end() && it->monomial == m) {
        BigRational s = it->coeff + gt[k].coeff * c;
        if (!s.is_zero()) merged.push_back({std::move(m), std::move(s)});
        ++it;
      } else {
        merged.push_back({std::move(m), gt[k].coeff * c});
      }
    }
    for (; it != work.end(); ++it) merged.push_back(std::move(*it));
    std::swap(work, merged);
    head = 0;
  }
  return Polynomial::from_sorted(f.arity(), std::move(rem), order);
}

std::uint64_t fingerprint_of(const std::vector<Polynomial>& gens, MonomialOrder order, unsigned truncation) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
  };
  mix(static_cast<std::uint64_t>(order.kind()));
  mix(order.block_size());
  mix(truncation);
  for (const Polynomial& p : gens) mix(p.hash());
  return h;
}

// Canonical input: order conversion, truncation, monic, sorted by hash, duplicates dropped.
std::vector<Polynomial> canonical_inputs(std::span<const Polynomial> gens, MonomialOrder order,
                                         unsigned truncation, std::size_t& arity) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens) {
    if (out.empty() && arity == 0) arity = g.arity();
    if (g.arity() != arity) throw ArityMismatch("generators of different arity");
    Polynomial p = g.with_order(order);
    if (truncation != 0) p = p.truncated(truncation);
    if (p.is_zero()) continue;
    out.push_back(p.monic());
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    std::size_t ha = a.hash(), hb = b.hash();
    if (ha != hb) return ha < hb;
    return a.size() < b.size();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class Engine {
 public:
  Engine(MonomialOrder order, unsigned truncation, std::size_t arity)
      : order_(order), truncation_(truncation), arity_(arity), key_{order} {}

  GroebnerBasis run(std::vector<Polynomial> inputs) {
    std::sort(inputs.begin(), inputs.end(), [this](const Polynomial& a, const Polynomial& b) {
      return key_.less(a.leading_monomial(), b.leading_monomial());
    });
    std::size_t next_input = 0;
    while (next_input < inputs.size() || !pairs_.empty()) {
      Polynomial h;
      bool take_input = next_input < inputs.size() &&
                        (pairs_.empty() || !key_.less(pairs_.begin()->lcm, inputs[next_input].leading_monomial()));
      if (take_input) {
        h = std::move(inputs[next_input++]);
      } else {
        Pair p = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        h = s_polynomial(polys_[p.i], polys_[p.j], truncation_);
      }
      h = reduce(h, true);
      if (h.is_zero()) continue;
      h = h.monic();
      if (h.leading_monomial().is_one()) return unit_basis();
      update(std::move(h));
    }
    return finish();
  }

 private:
  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  struct PairLess {
    SelectionKey key;
    bool operator()(const Pair& a, const Pair& b) const {
      if (key.less(a.lcm, b.lcm)) return true;
      if (key.less(b.lcm, a.lcm)) return false;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    }
  };

  const Polynomial* find_reducer(const Monomial& m) const {
    for (std::size_t idx : active_) {
      const Monomial& lt = polys_[idx].leading_monomial();
      if (lt.divides(m)) return &polys_[idx];
    }
    return nullptr;
  }

  Polynomial reduce(const Polynomial& f, bool full) const {
    return reduce_terms(f, [this](const Monomial& m) { return find_reducer(m); }, truncation_, full);
  }

  void update(Polynomial h) {
    const Monomial lt_h = h.leading_monomial();
    struct Candidate {
      std::size_t index;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> c;
    c.reserve(active_.size());
    for (std::size_t idx : active_) {
      const Monomial& lt = polys_[idx].leading_monomial();
      c.push_back({idx, lt.lcm(lt_h), lt.coprime(lt_h)});
    }
    std::vector<Candidate> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (d[b].lcm.divides(c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(std::move(c[a]));
    }
    // Chain criterion on old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (lt_h.divides(l) && polys_[it->i].leading_monomial().lcm(lt_h) != l &&
          polys_[it->j].leading_monomial().lcm(lt_h) != l) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    const std::size_t new_index = polys_.size();
    for (Candidate& cand : d) {
      if (cand.coprime) continue;
      if (truncation_ != 0 && cand.lcm.degree() >= truncation_) continue;
      pairs_.insert(Pair{std::move(cand.lcm), cand.index, new_index});
    }
    std::vector<std::size_t> still_active;
    still_active.reserve(active_.size() + 1);
    for (std::size_t idx : active_)
      if (!lt_h.divides(polys_[idx].leading_monomial())) still_active.push_back(idx);
    still_active.push_back(new_index);
    active_ = std::move(still_active);
    polys_.push_back(std::move(h));
  }

  GroebnerBasis unit_basis() const {
    GroebnerBasis gb;
    gb.order = order_;
    gb.truncation = truncation_;
    gb.arity = arity_;
    gb.generators.push_back(Polynomial::constant(arity_, BigRational(1), order_));
    return gb;
  }

  GroebnerBasis finish() {
    std::vector<std::size_t> idx = active_;
    std::sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
      return order_.compare(polys_[a].leading_monomial(), polys_[b].leading_monomial()) < 0;
    });
    GroebnerBasis gb;
    gb.order = order_;
    gb.truncation = truncation_;
    gb.arity = arity_;
    for (std::size_t a : idx) {
      const Polynomial& g = polys_[a];
      // Tail reduction against the other basis elements; the leading term is minimal.
      std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
      Polynomial t = Polynomial::from_sorted(arity_, std::move(tail), order_);
      Polynomial reduced_tail = reduce(t, true);
      std::vector<Term> terms;
      terms.reserve(reduced_tail.size() + 1);
      terms.push_back(g.leading());
      for (const Term& term : reduced_tail.terms()) terms.push_back(term);
      gb.generators.push_back(Polynomial::from_sorted(arity_, std::move(terms), order_));
    }
    return gb;
  }

  MonomialOrder order_;
  unsigned truncation_;
  std::size_t arity_;
  SelectionKey key_;
  std::deque<Polynomial> polys_;
  std::vector<std::size_t> active_;
  std::set<Pair, PairLess> pairs_{PairLess{SelectionKey{order_}}};
};

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return generators.size() == 1 && generators.front().leading_monomial().is_one();
}

// ---------------------------------------------------------------------------------------
// Cache

struct GroebnerCache::Impl {
  struct Entry {
    std::vector<Polynomial> inputs;
    GroebnerBasis basis;
  };
  mutable std::mutex mutex;
  std::unordered_map<std::uint64_t, std::vector<Entry>> table;
  std::size_t hits = 0;
  std::size_t misses = 0;
  bool enabled = true;
};

GroebnerCache::GroebnerCache() : impl_(std::make_unique<Impl>()) {}
GroebnerCache::~GroebnerCache() = default;

GroebnerCache& GroebnerCache::instance() {
  static GroebnerCache cache;
  return cache;
}

void GroebnerCache::clear() {
  std::lock_guard lock(impl_->mutex);
  impl_->table.clear();
  impl_->hits = impl_->misses = 0;
}

std::size_t GroebnerCache::size() const {
  std::lock_guard lock(impl_->mutex);
  std::size_t n = 0;
  for (const auto& [k, v] : impl_->table) n += v.size();
  return n;
}

std::size_t GroebnerCache::hits() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->hits;
}

std::size_t GroebnerCache::misses() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->misses;
}

void GroebnerCache::set_enabled(bool enabled) {
  std::lock_guard lock(impl_->mutex);
  impl_->enabled = enabled;
}

// ---------------------------------------------------------------------------------------

GroebnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrder order, unsigned truncation) {
  if (!order.is_global() && truncation == 0)
    throw ValidationError("a local order needs an m-adic truncation degree");
  std::size_t arity = 0;
  std::vector<Polynomial> inputs = canonical_inputs(gens, order, truncation, arity);
  const std::uint64_t fp = fingerprint_of(inputs, order, truncation);

  auto& cache = *GroebnerCache::instance().impl_;
  {
    std::lock_guard lock(cache.mutex);
    if (cache.enabled) {
      auto it = cache.table.find(fp);
      if (it != cache.table.end()) {
        for (const auto& e : it->second) {
          if (e.inputs == inputs && e.basis.order == order && e.basis.truncation == truncation) {
            ++cache.hits;
            return e.basis;
          }
        }
      }
    }
    ++cache.misses;
  }

  GroebnerBasis gb;
  if (inputs.empty()) {
    gb.order = order;
    gb.truncation = truncation;
    gb.arity = arity;
  } else {
    gb = Engine(order, truncation, arity).run(inputs);
  }
  gb.fingerprint = fp;

  // Concurrent duplicate computations are harmless: results are deterministic.
  std::lock_guard lock(cache.mutex);
  if (cache.enabled) cache.table[fp].push_back({std::move(inputs), gb});
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.arity() != gb.arity && !gb.generators.empty())
    throw ArityMismatch("normal form: arity " + std::to_string(f.arity()) + " vs " + std::to_string(gb.arity));
  Polynomial g = f.with_order(gb.order);
  if (gb.generators.empty()) return gb.truncation ? g.truncated(gb.truncation) : g;
  auto find = [&gb](const Monomial& m) -> const Polynomial* {
    for (const Polynomial& p : gb.generators)
      if (p.leading_monomial().divides(m)) return &p;
    return nullptr;
  };
  return reduce_terms(g, find, gb.truncation, true);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, unsigned truncation) {
  const Monomial& lf = f.leading_monomial();
  const Monomial& lg = g.leading_monomial();
  Monomial l = lf.lcm(lg);
  Polynomial s(f.arity(), f.order());
  s.add_scaled_shifted(f, BigRational(1) / f.leading_coeff(), l / lf, truncation);
  s.add_scaled_shifted(g, -(BigRational(1) / g.leading_coeff()), l / lg, truncation);
  return s;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (gb.truncation != 0 &&
          g[i].leading_monomial().lcm(g[j].leading_monomial()).degree() >= gb.truncation)
        continue;
      if (!normal_form(s_polynomial(g[i], g[j], gb.truncation), gb).is_zero()) return false;
    }
  }
  return true;
}

namespace {

bool in_leading_ideal(const Monomial& m, const std::vector<Polynomial>& gens) {
  for (const Polynomial& p : gens)
    if (p.leading_monomial().divides(m)) return true;
  return false;
}

bool has_all_pure_powers(const GroebnerBasis& gb) {
  std::vector<bool> seen(gb.arity, false);
  for (const Polynomial& p : gb.generators) {
    int v = p.leading_monomial().pure_power_variable();
    if (v >= 0) seen[static_cast<std::size_t>(v)] = true;
    if (p.leading_monomial().is_one()) return true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Breadth-first walk of the order ideal of standard monomials, degree by degree.
std::vector<Monomial> walk_staircase(const GroebnerBasis& gb) {
  std::vector<Monomial> out;
  Monomial one(gb.arity);
  if (in_leading_ideal(one, gb.generators)) return out;
  std::vector<Monomial> layer{one};
  std::unordered_set<Monomial, MonomialHash> seen;
  while (!layer.empty()) {
    for (const Monomial& m : layer) out.push_back(m);
    std::vector<Monomial> next;
    for (const Monomial& s : layer) {
      for (std::size_t i = 0; i < gb.arity; ++i) {
        Monomial m = s * Monomial::variable(gb.arity, i);
        if (gb.truncation != 0 && m.degree() >= gb.truncation) continue;
        if (seen.count(m) != 0) continue;
        seen.insert(m);
        if (!in_leading_ideal(m, gb.generators)) next.push_back(m);
      }
    }
    std::sort(next.begin(), next.end(), [&gb](const Monomial& a, const Monomial& b) {
      return gb.order.compare(a, b) > 0;
    });
    layer = std::move(next);
  }
  return out;
}

}  // namespace

StandardMonomialCount count_standard_monomials(const GroebnerBasis& gb) {
  if (gb.truncation == 0 && !has_all_pure_powers(gb)) return {true, 0};
  return {false, walk_staircase(gb).size()};
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  if (gb.truncation == 0 && !has_all_pure_powers(gb))
    throw ValidationError("infinitely many standard monomials");
  return walk_staircase(gb);
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, unsigned k) {
  if (!gens.empty() && gens.front().arity() <= k)
    throw ValidationError("cannot eliminate all variables");
  GroebnerBasis gb = buchberger(gens, MonomialOrder::block(k));
  std::vector<Polynomial> out;
  for (const Polynomial& p : gb.generators)
    if (!p.involves_first(k)) out.push_back(p.unshifted(k).with_order(MonomialOrder::degrevlex()));
  return out;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw ValidationError("division by the zero polynomial");
  const MonomialOrder order = MonomialOrder::degrevlex();
  Polynomial r = f.with_order(order);
  Polynomial gg = g.with_order(order);
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Term& lt = r.leading();
    if (!gg.leading_monomial().divides(lt.monomial))
      throw ValidationError("polynomial division is not exact");
    Monomial m = lt.monomial / gg.leading_monomial();
    BigRational c = lt.coeff / gg.leading_coeff();
    quotient.push_back({m, c});
    r.add_scaled_shifted(gg, -c, m, 0);
  }
  return Polynomial::from_terms(f.arity(), std::move(quotient), order);
}

}  // namespace relhilb

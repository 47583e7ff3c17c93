#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "relhilb/errors.hpp"
#include "relhilb/local_ideal.hpp"

namespace relhilb {

LocalSettings& local_settings() {
  static LocalSettings settings;
  return settings;
}

LocalQuotient::LocalQuotient(GroebnerBasis basis, std::vector<Monomial> standard)
    : basis_(std::move(basis)), standard_(std::move(standard)) {
  for (std::size_t i = 0; i < standard_.size(); ++i) {
    index_.emplace(standard_[i], i);
    power_bound_ = std::max(power_bound_, standard_[i].degree() + 1);
  }
}

Polynomial LocalQuotient::reduce(const Polynomial& f) const {
  return normal_form(f.with_order(basis_.order).truncated(basis_.truncation), basis_);
}

bool LocalQuotient::contains(const Polynomial& f) const { return reduce(f).is_zero(); }

SparseVector LocalQuotient::coordinates(const Polynomial& f) const {
  SparseVector v;
  Polynomial r = reduce(f);
  for (const Term& t : r.terms()) v.emplace_back(index_.at(t.monomial), t.coeff);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Polynomial LocalQuotient::from_coordinates(const SparseVector& v, std::size_t arity) const {
  std::vector<Term> terms;
  for (const auto& [i, c] : v) terms.push_back({standard_[i], c});
  return Polynomial::from_terms(arity, std::move(terms));
}

namespace {

const MonomialOrder kLocal = MonomialOrder::local_degrevlex();

struct Failure {
  unsigned truncation;
  std::size_t count;
};

struct Entry {
  Ideal ideal;
  std::shared_ptr<const LocalQuotient> quotient;
  Failure failure{};
};

struct Cache {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, std::vector<Entry>> table;
};

Cache& cache() {
  static Cache c;
  return c;
}

// Returns the quotient if m^(N-1) is certified to lie in the ideal, else nullptr.
std::shared_ptr<const LocalQuotient> attempt(const std::vector<Polynomial>& inputs, unsigned truncation,
                                             std::size_t& count) {
  GroebnerBasis gb = buchberger(inputs, kLocal, truncation);
  std::vector<Monomial> standard = standard_monomials(gb);
  count = standard.size();
  bool certified = std::none_of(standard.begin(), standard.end(),
                                [truncation](const Monomial& m) { return m.degree() + 1 >= truncation; });
  if (!certified) return nullptr;
  return std::make_shared<const LocalQuotient>(std::move(gb), std::move(standard));
}

std::vector<Polynomial> local_inputs(const std::vector<Polynomial>& polys, unsigned truncation) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const Polynomial& p : polys) {
    Polynomial q = p.with_order(kLocal).truncated(truncation);
    if (!q.is_zero()) out.push_back(std::move(q));
  }
  return out;
}

unsigned max_degree(const Ideal& K) {
  unsigned d = 0;
  for (const Polynomial& p : K.generators()) d = std::max(d, p.total_degree());
  for (const Polynomial& p : K.ring()->relations()) d = std::max(d, p.total_degree());
  return d;
}

Ideal rebuild(const std::vector<Ideal::Factor>& factors) {
  Ideal out;
  for (const Ideal::Factor& f : factors) {
    if (f.exponent == 0) continue;
    Ideal p = ideal_power(f.base, f.exponent);
    out = out.valid() ? ideal_product(out, p) : p;
  }
  return out;
}

std::shared_ptr<const LocalQuotient> from_product(const Ideal& K) {
  const auto& fs = K.factors();
  unsigned total = 0;
  for (const auto& f : fs) total += f.exponent;
  if (total == 1) return local_quotient(fs.front().base);

  std::size_t peel = 0;
  for (std::size_t i = 1; i < fs.size(); ++i)
    if (fs[i].exponent < fs[peel].exponent) peel = i;
  std::vector<Ideal::Factor> rest_factors = fs;
  rest_factors[peel].exponent -= 1;
  const Ideal& base = fs[peel].base;

  auto rest = local_quotient(rebuild(rest_factors));
  auto qb = local_quotient(base);
  // m^s ⊆ a + rest and m^t ⊆ a + base give m^(s+t) ⊆ a + base*rest.
  unsigned truncation = rest->power_bound() + qb->power_bound() + 1;
  std::vector<Polynomial> inputs = local_inputs(K.ring()->relations(), truncation);
  for (const Polynomial& b : base.generators()) {
    Polynomial bl = b.with_order(kLocal);
    for (const Polynomial& g : rest->basis().generators) {
      Polynomial p = bl.times_truncated(g, truncation);
      if (!p.is_zero()) inputs.push_back(std::move(p));
    }
  }
  std::size_t count = 0;
  auto q = attempt(inputs, truncation, count);
  if (!q) throw PropertyViolation("product truncation bound failed to certify");
  return q;
}

std::shared_ptr<const LocalQuotient> from_floor(const Ideal& K) {
  auto qf = local_quotient(*K.floor());
  unsigned truncation = qf->truncation();
  std::vector<Polynomial> inputs = qf->basis().generators;
  for (Polynomial& p : local_inputs(K.extra(), truncation)) inputs.push_back(std::move(p));
  std::size_t count = 0;
  auto q = attempt(inputs, truncation, count);
  if (!q) throw PropertyViolation("subideal truncation bound failed to certify");
  return q;
}

std::shared_ptr<const LocalQuotient> from_schedule(const Ideal& K) {
  const unsigned cap = std::max(2u, local_settings().length_cap);
  const unsigned step = 2 * max_degree(K) + 2;
  std::vector<Polynomial> all = K.ring()->relations();
  all.insert(all.end(), K.generators().begin(), K.generators().end());
  unsigned truncation = std::min(step, cap);
  while (true) {
    std::size_t count = 0;
    auto q = attempt(local_inputs(all, truncation), truncation, count);
    if (q) return q;
    if (truncation >= cap)
      throw CapExceeded("no certified truncation up to degree " + std::to_string(cap) +
                            "; the ideal is likely not m-primary",
                        truncation, count);
    truncation = std::min(truncation + step, cap);
  }
}

std::shared_ptr<const LocalQuotient> compute(const Ideal& K) {
  if (K.is_unit()) {
    GroebnerBasis gb = buchberger(std::vector<Polynomial>{Polynomial::constant(K.ring()->arity(), BigRational(1), kLocal)},
                                  kLocal, 1);
    return std::make_shared<const LocalQuotient>(std::move(gb), std::vector<Monomial>{});
  }
  if (!K.factors().empty()) return from_product(K);
  if (K.floor() != nullptr && local_length(*K.floor()).infinite == false) return from_floor(K);
  return from_schedule(K);
}

}  // namespace

std::shared_ptr<const LocalQuotient> local_quotient(const Ideal& K) {
  Cache& c = cache();
  {
    std::lock_guard lock(c.mutex);
    auto it = c.table.find(K.key());
    if (it != c.table.end()) {
      for (const Entry& e : it->second) {
        if (!e.ideal.same_generators(K)) continue;
        if (e.quotient) return e.quotient;
        throw CapExceeded("ideal is not m-primary below the length cap", e.failure.truncation, e.failure.count);
      }
    }
  }
  Entry entry{K, nullptr, {}};
  try {
    entry.quotient = compute(K);
  } catch (const CapExceeded& e) {
    entry.failure = {e.last_truncation(), e.last_count()};
    std::lock_guard lock(c.mutex);
    c.table[K.key()].push_back(entry);
    throw;
  }
  std::lock_guard lock(c.mutex);
  c.table[K.key()].push_back(entry);
  return entry.quotient;
}

void clear_local_cache() {
  Cache& c = cache();
  std::lock_guard lock(c.mutex);
  c.table.clear();
}

LocalLength local_length(const Ideal& K) {
  try {
    auto q = local_quotient(K);
    return {false, q->length(), q->truncation()};
  } catch (const CapExceeded& e) {
    return {true, e.last_count(), e.last_truncation()};
  }
}

std::size_t length(const Ideal& K) { return local_quotient(K)->length(); }

}  // namespace relhilb

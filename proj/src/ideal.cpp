#include <algorithm>
#include <unordered_set>

#include "relhilb/errors.hpp"
#include "relhilb/local_ideal.hpp"
#include "relhilb/polynomial_text.hpp"

namespace relhilb {

RingPresentation::RingPresentation(std::string label, std::vector<std::string> variables,
                                   std::vector<Polynomial> relations, unsigned dim, bool gorenstein)
    : label_(std::move(label)), variables_(std::move(variables)), dim_(dim), gorenstein_(gorenstein) {
  if (variables_.empty()) throw ValidationError("a ring needs at least one variable");
  if (variables_.size() > kMaxVariables)
    throw ValidationError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  for (std::size_t i = 0; i < variables_.size(); ++i)
    for (std::size_t j = i + 1; j < variables_.size(); ++j)
      if (variables_[i] == variables_[j]) throw ValidationError("duplicate variable " + variables_[i]);
  for (Polynomial& r : relations) {
    if (r.arity() != variables_.size()) throw ArityMismatch("relation arity differs from the ring");
    if (!r.constant_term().is_zero())
      throw ValidationError("relation " + to_string(r, variables_) +
                            " has a nonzero constant term: the origin is not on V(a)");
    if (!r.is_zero()) relations_.push_back(r.with_order(MonomialOrder::degrevlex()));
  }
  relation_basis_ = buchberger(relations_, MonomialOrder::degrevlex());
  relation_basis_.arity = variables_.size();
}

std::shared_ptr<const RingPresentation> RingPresentation::create(std::string label,
                                                                 std::vector<std::string> variables,
                                                                 const std::vector<std::string>& relations,
                                                                 unsigned dim, bool gorenstein) {
  std::vector<Polynomial> rels;
  for (const std::string& r : relations) rels.push_back(parse_polynomial(r, variables));
  return std::make_shared<const RingPresentation>(std::move(label), std::move(variables), std::move(rels), dim,
                                                  gorenstein);
}

Polynomial RingPresentation::parse(std::string_view text) const { return parse_polynomial(text, variables_); }

std::string RingPresentation::format(const Polynomial& f) const { return to_string(f, variables_); }

Polynomial RingPresentation::variable(std::size_t index) const {
  return Polynomial::variable(arity(), index);
}

Polynomial RingPresentation::reduce(const Polynomial& f) const {
  if (relation_basis_.generators.empty()) return f.with_order(MonomialOrder::degrevlex());
  return normal_form(f, relation_basis_);
}

// ---------------------------------------------------------------------------------------

struct Ideal::Data {
  Ring ring;
  std::vector<Polynomial> generators;
  IdealFlags flags;
  std::string name;
  std::string note;
  std::vector<Factor> factors;
  std::optional<Ideal> floor;
  std::vector<Polynomial> extra;
  std::vector<Polynomial> sorted;  // monic generators sorted by hash, for identity tests
  std::uint64_t key = 0;
};

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Reduces modulo the relations, drops zeros and scalar duplicates.
std::vector<Polynomial> canonical(const RingPresentation& ring, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  std::unordered_set<Polynomial, PolynomialHash> seen;
  for (const Polynomial& g : gens) {
    if (g.arity() != ring.arity()) throw ArityMismatch("generator arity differs from the ring");
    Polynomial r = ring.reduce(g);
    if (r.is_zero()) continue;
    if (!seen.insert(r.monic()).second) continue;
    out.push_back(std::move(r));
  }
  return out;
}

void finish(Ideal::Data& d) {
  d.sorted.clear();
  for (const Polynomial& g : d.generators) d.sorted.push_back(g.monic());
  std::sort(d.sorted.begin(), d.sorted.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.hash() != b.hash()) return a.hash() < b.hash();
    return a.size() < b.size();
  });
  std::uint64_t h = std::hash<const void*>{}(d.ring.get());
  for (const Polynomial& p : d.sorted) h = mix(h, p.hash());
  d.key = h;
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators, IdealFlags flags, std::string name) {
  if (!ring) throw ValidationError("ideal without a ring");
  auto d = std::make_shared<Data>();
  d->generators = canonical(*ring, generators);
  d->ring = std::move(ring);
  d->flags = flags;
  d->name = std::move(name);
  finish(*d);
  data_ = std::move(d);
}

Ideal Ideal::parse(Ring ring, const std::vector<std::string>& generators, IdealFlags flags, std::string name) {
  std::vector<Polynomial> gens;
  for (const std::string& g : generators) gens.push_back(ring->parse(g));
  return Ideal(std::move(ring), std::move(gens), flags, std::move(name));
}

Ideal Ideal::maximal(Ring ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->arity(); ++i) gens.push_back(ring->variable(i));
  return Ideal(std::move(ring), std::move(gens), {}, "m");
}

Ideal Ideal::unit(Ring ring) {
  std::size_t n = ring->arity();
  return Ideal(std::move(ring), {Polynomial::constant(n, BigRational(1))}, {}, "A");
}

Ideal Ideal::extend(const Ideal& floor, std::vector<Polynomial> extra, std::string name) {
  auto d = std::make_shared<Data>();
  d->ring = floor.ring();
  d->extra = canonical(*d->ring, extra);
  std::vector<Polynomial> all = floor.generators();
  all.insert(all.end(), d->extra.begin(), d->extra.end());
  d->generators = canonical(*d->ring, all);
  d->floor = floor;
  d->name = std::move(name);
  finish(*d);
  return Ideal(std::shared_ptr<const Data>(std::move(d)));
}

const Ring& Ideal::ring() const { return data_->ring; }
const std::vector<Polynomial>& Ideal::generators() const { return data_->generators; }
const IdealFlags& Ideal::flags() const { return data_->flags; }
const std::string& Ideal::name() const { return data_->name; }
const std::string& Ideal::note() const { return data_->note; }
std::uint64_t Ideal::key() const { return data_->key; }
const std::vector<Ideal::Factor>& Ideal::factors() const { return data_->factors; }
const Ideal* Ideal::floor() const { return data_->floor ? &*data_->floor : nullptr; }
const std::vector<Polynomial>& Ideal::extra() const { return data_->extra; }

bool Ideal::is_unit() const {
  return std::any_of(generators().begin(), generators().end(),
                     [](const Polynomial& g) { return !g.constant_term().is_zero(); });
}

Ideal Ideal::named(std::string name) const {
  auto d = std::make_shared<Data>(*data_);
  d->name = std::move(name);
  return Ideal(std::shared_ptr<const Data>(std::move(d)));
}

Ideal Ideal::with_flags(IdealFlags flags) const {
  auto d = std::make_shared<Data>(*data_);
  d->flags = flags;
  return Ideal(std::shared_ptr<const Data>(std::move(d)));
}

Ideal Ideal::with_note(std::string note) const {
  auto d = std::make_shared<Data>(*data_);
  d->note = std::move(note);
  return Ideal(std::shared_ptr<const Data>(std::move(d)));
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators().size(); ++i) {
    if (i > 0) out += ", ";
    out += ring()->format(generators()[i]);
  }
  return out + ")";
}

bool Ideal::same_generators(const Ideal& other) const {
  return ring() == other.ring() && key() == other.key() && data_->sorted == other.data_->sorted;
}

// ---------------------------------------------------------------------------------------

namespace {

std::vector<Ideal::Factor> factors_of(const Ideal& K) {
  if (!K.factors().empty()) return K.factors();
  return {{K, 1}};
}

std::vector<Polynomial> products(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  out.reserve(a.size() * b.size());
  for (const Polynomial& f : a)
    for (const Polynomial& g : b) out.push_back(f * g);
  return out;
}

std::string product_name(const Ideal& K, const Ideal& L) {
  if (K.name().empty() || L.name().empty()) return {};
  return K.name() + "*" + L.name();
}

}  // namespace

Ideal ideal_sum(const Ideal& K, const Ideal& L) {
  if (K.ring() != L.ring()) throw ValidationError("ideals live in different rings");
  std::string name = K.name().empty() || L.name().empty() ? std::string{} : K.name() + "+" + L.name();
  return Ideal::extend(K, L.generators(), std::move(name));
}

Ideal ideal_product(const Ideal& K, const Ideal& L) {
  if (K.ring() != L.ring()) throw ValidationError("ideals live in different rings");
  auto d = std::make_shared<Ideal::Data>();
  d->ring = K.ring();
  d->generators = canonical(*d->ring, products(K.generators(), L.generators()));
  d->name = product_name(K, L);
  std::vector<Ideal::Factor> fs = factors_of(K);
  for (const Ideal::Factor& f : factors_of(L)) {
    auto it = std::find_if(fs.begin(), fs.end(), [&f](const Ideal::Factor& g) { return g.base.same_generators(f.base); });
    if (it != fs.end())
      it->exponent += f.exponent;
    else
      fs.push_back(f);
  }
  d->factors = std::move(fs);
  finish(*d);
  return Ideal(std::shared_ptr<const Ideal::Data>(std::move(d)));
}

Ideal ideal_power(const Ideal& K, unsigned n) {
  if (n == 0) throw ValidationError("ideal_power needs n >= 1");
  if (n == 1) return K;
  auto d = std::make_shared<Ideal::Data>();
  d->ring = K.ring();
  std::vector<Polynomial> gens = K.generators();
  for (unsigned i = 1; i < n; ++i) gens = canonical(*d->ring, products(gens, K.generators()));
  d->generators = std::move(gens);
  if (!K.name().empty()) d->name = K.name() + "^" + std::to_string(n);
  d->factors = factors_of(K);
  for (auto& f : d->factors) f.exponent *= n;
  finish(*d);
  return Ideal(std::shared_ptr<const Ideal::Data>(std::move(d)));
}

}  // namespace relhilb

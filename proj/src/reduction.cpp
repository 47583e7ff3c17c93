#include <algorithm>
#include <random>

#include "relhilb/errors.hpp"
#include "relhilb/reduction.hpp"
#include "relhilb/rr_closure.hpp"

namespace relhilb {

namespace {

std::optional<std::size_t> maybe_length(const Ideal& K) {
  LocalLength l = local_length(K);
  if (l.infinite) return std::nullopt;
  return l.value;
}

Ideal times_power(const Ideal& I, const Ideal& J, unsigned n) {
  return n == 0 ? I : ideal_product(I, ideal_power(J, n));
}

// A/(a + (x_1..x_k)) with dimension d - k.
Ring quotient_ring(const Ring& ring, const std::vector<Polynomial>& xs, std::size_t k) {
  std::vector<Polynomial> rel = ring->relations();
  rel.insert(rel.end(), xs.begin(), xs.begin() + static_cast<long>(k));
  unsigned dim = ring->dim() >= k ? ring->dim() - static_cast<unsigned>(k) : 0;
  return std::make_shared<const RingPresentation>(ring->label() + "/(x_1..x_" + std::to_string(k) + ")",
                                                  ring->variables(), std::move(rel), dim);
}

// (K^(n+1) : x) = K^n, tested as injectivity of x on A/K^n -> A/K^(n+1).
bool colon_stable(const Ideal& K, const Polynomial& x, unsigned n) {
  Ideal Kn = ideal_power(K, n);
  Ideal c = ideal_colon(ideal_power(K, n + 1), Ideal(K.ring(), {x}), Kn);
  return c.same_generators(Kn);
}

Polynomial random_combination(const Ideal& K, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  const std::size_t n = K.ring()->arity();
  while (true) {
    Polynomial x(n);
    for (const Polynomial& g : K.generators()) x += g.scaled(BigRational(BigInt(coeff(rng))));
    x = K.ring()->reduce(x);
    if (!x.is_zero()) return x;
  }
}

}  // namespace

ReductionCertificate is_reduction(const Ideal& I, const Ideal& J, const Options& opt) {
  if (!local_contains(J, I)) throw NotContained(I.to_string() + " is not contained in " + J.to_string());
  ReductionCertificate out;
  for (unsigned n = 0; n <= opt.reduction_cap; ++n) {
    out.searched_to = n;
    auto li = maybe_length(times_power(I, J, n));
    auto lj = maybe_length(ideal_power(J, n + 1));
    if (!lj) {
      out.note = "J is not m-primary";
      return out;
    }
    if (!li) continue;
    if (*li != *lj) continue;
    for (unsigned p = 1; p <= opt.persist; ++p) {
      if (length(times_power(I, J, n + p)) != length(ideal_power(J, n + p + 1)))
        throw PropertyViolation("I*J^n = J^(n+1) did not persist at n = " + std::to_string(n + p));
    }
    out.is_reduction = true;
    out.reduction_number = n;
    return out;
  }
  out.note = "no n <= " + std::to_string(opt.reduction_cap) + " with I*J^n = J^(n+1)";
  return out;
}

bool check_superficial(const Ideal& K, const std::vector<Polynomial>& elements, unsigned window_start,
                       unsigned window_end) {
  const Ring& ring = K.ring();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Ring ai = i == 0 ? ring : quotient_ring(ring, elements, i);
    Ideal Ki(ai, K.generators());
    Polynomial xi = ai->reduce(elements[i]);
    for (unsigned n = window_start; n <= window_end; ++n)
      if (!colon_stable(Ki, xi, n)) return false;
  }
  return true;
}

SuperficialSequence superficial_sequence(const Ideal& K, unsigned count, const Options& opt) {
  const Ring& ring = K.ring();
  const unsigned d = ring->dim();
  if (count > d) throw UsageError("a superficial sequence has at most d = " + std::to_string(d) + " elements");
  if (K.is_zero() || K.is_unit()) throw UsageError("superficial elements need a proper nonzero ideal");
  std::mt19937_64 rng(opt.seed);
  long bound = 3;
  for (unsigned round = 0; round < opt.max_retries; ++round, bound *= 2) {
    std::vector<Polynomial> xs;
    for (unsigned i = 0; i < d; ++i) xs.push_back(random_combination(K, rng, bound));
    ReductionCertificate cert = is_reduction(Ideal(ring, xs), K, opt);
    if (!cert.is_reduction) continue;
    const unsigned start = std::max(1u, *cert.reduction_number);
    const unsigned end = start + opt.window;
    if (!check_superficial(K, std::vector<Polynomial>(xs.begin(), xs.begin() + count), start, end)) continue;
    SuperficialSequence s;
    s.elements.assign(xs.begin(), xs.begin() + count);
    s.seed = opt.seed;
    s.window_start = start;
    s.window_end = end;
    s.rounds = round + 1;
    s.coefficient_bound = static_cast<unsigned>(bound);
    return s;
  }
  throw SuperficialSearchFailed("no superficial sequence of length " + std::to_string(count) + " after " +
                                std::to_string(opt.max_retries) + " rounds");
}

Ideal minimal_reduction(const Ideal& K, const Options& opt, SuperficialSequence* sequence) {
  const unsigned d = K.ring()->dim();
  SuperficialSequence s = superficial_sequence(K, d, opt);
  Ideal q(K.ring(), s.elements, {}, "q");
  ReductionCertificate cert = is_reduction(q, K, opt);
  if (!cert.is_reduction) throw ReductionCheckFailed("candidate is not a reduction");
  BigInt e0 = coefficients(hilbert_series(K, opt, *cert.reduction_number + d + opt.window)).e[0];
  if (BigInt(static_cast<unsigned long>(length(q))) != e0)
    throw ReductionCheckFailed("λ(A/q) = " + std::to_string(length(q)) + " but e_0 = " + e0.get_str());
  if (sequence) *sequence = s;
  return q;
}

std::string to_string(DepthVerdict v) {
  switch (v) {
    case DepthVerdict::certified_cm:
      return "CERTIFIED_CM";
    case DepthVerdict::pass_window:
      return "PASS_WINDOW";
    case DepthVerdict::fail:
      return "FAIL";
  }
  return "FAIL";
}

namespace {

bool vv_equal(const Ideal& K, const Ideal& q, unsigned n) {
  Ideal Kn = ideal_power(K, n);
  std::size_t lhs = length(ideal_intersect(Kn, q));
  std::size_t rhs = length(times_power(q, K, n - 1));
  return lhs == rhs;
}

}  // namespace

DepthProbeResult vv_depth_probe(const Ideal& K, unsigned k, const std::vector<Polynomial>& seq, unsigned n_cap,
                                const Options& opt) {
  const Ring& ring = K.ring();
  const unsigned d = ring->dim();
  if (k == 0 || k > d) throw UsageError("probe length must lie in 1..d");
  if (seq.size() < k) throw UsageError("sequence shorter than k");
  DepthProbeResult out;
  out.k = k;
  if (k == d) {
    Ideal q(ring, std::vector<Polynomial>(seq.begin(), seq.begin() + k));
    ReductionCertificate cert = is_reduction(q, K, opt);
    if (!cert.is_reduction) throw NotAReduction("the sequence does not generate a reduction");
    out.reduction_number = cert.reduction_number;
    out.checked_to = *cert.reduction_number + 1;
    for (unsigned n = 1; n <= out.checked_to; ++n) {
      if (!vv_equal(K, q, n)) {
        out.verdict = DepthVerdict::fail;
        out.witness_n = n;
        return out;
      }
    }
    out.verdict = DepthVerdict::certified_cm;
    return out;
  }
  out.checked_to = n_cap;
  for (unsigned i = 0; i < k; ++i) {
    Ring ai = i == 0 ? ring : quotient_ring(ring, seq, i);
    Ideal Ki(ai, K.generators());
    Polynomial xi = ai->reduce(seq[i]);
    for (unsigned n = 1; n <= n_cap; ++n) {
      if (!colon_stable(Ki, xi, n)) {
        out.verdict = DepthVerdict::fail;
        out.witness_element = i + 1;
        out.witness_n = n;
        return out;
      }
    }
  }
  out.verdict = DepthVerdict::pass_window;
  return out;
}

bool recheck_witness(const Ideal& K, const std::vector<Polynomial>& seq, const DepthProbeResult& result) {
  if (result.verdict != DepthVerdict::fail || !result.witness_n) return false;
  clear_local_cache();
  const Ring& ring = K.ring();
  if (!result.witness_element) {
    Ideal q(ring, std::vector<Polynomial>(seq.begin(), seq.begin() + result.k));
    Ideal Kn = ideal_power(K, *result.witness_n);
    // the global intersection route shares no code with the linear-algebra one
    Ideal inter = ideal_intersect_global(Kn, q);
    return length(inter) != length(times_power(q, K, *result.witness_n - 1));
  }
  const unsigned i = *result.witness_element - 1;
  Ring ai = i == 0 ? ring : quotient_ring(ring, seq, i);
  Ideal Ki(ai, K.generators());
  Polynomial xi = ai->reduce(seq[i]);
  const unsigned n = *result.witness_n;
  Ideal c = ideal_colon_global(ideal_power(Ki, n + 1), Ideal(ai, {xi}));
  return length(c) != length(ideal_power(Ki, n));
}

HMSums hm_sums(const Ideal& K, const Ideal& q, const Options& opt) {
  ReductionCertificate cert = is_reduction(q, K, opt);
  if (!cert.is_reduction) throw NotAReduction(q.to_string() + " is not a reduction of " + K.to_string());
  const unsigned r = *cert.reduction_number;
  const unsigned d = K.ring()->dim();
  HMSums out;
  out.e1 = coefficients(hilbert_series(K, opt, r + d + opt.window)).e[1];
  const long lq = static_cast<long>(length(q));
  for (unsigned n = 1; n <= r + 1; ++n) {
    Ideal Kn = ideal_power(K, n);
    long lower = lq - static_cast<long>(length(ideal_sum(Kn, q)));
    long upper = static_cast<long>(length(times_power(q, K, n - 1))) - static_cast<long>(length(Kn));
    out.lower_terms.emplace_back(lower);
    out.upper_terms.emplace_back(upper);
    out.s_lower += lower;
    out.s_upper += upper;
  }
  return out;
}

LinkIdeal link_ideal(const Ideal& q, const Ideal& m) {
  Ideal I = ideal_colon(q, m, q);
  LinkIdeal out{I.named("(q : m)"), false, false};
  if (local_contains(q, m)) {
    out.degenerate = true;
    return out;
  }
  if (length(ideal_power(I, 2)) != length(ideal_product(q, I)))
    throw LinkPropertyFailed("I^2 != qI for I = (q : m)");
  out.minimal_multiplicity = true;
  return out;
}

ExploreReport explore_asymptotic(const Ideal& J, unsigned from, unsigned to, const Options& opt,
                                 const std::vector<Polynomial>* sequence) {
  if (from == 0 || from > to) throw UsageError("explore range must satisfy 1 <= from <= to");
  const Ring& ring = J.ring();
  const unsigned d = ring->dim();
  ExploreReport out;
  if (sequence) {
    if (sequence->size() != d || !is_reduction(Ideal(ring, *sequence), J, opt).is_reduction)
      throw ReductionCheckFailed("supplied sequence is not a minimal reduction of " + J.to_string());
    out.sequence = *sequence;
  } else {
    SuperficialSequence s;
    minimal_reduction(J, opt, &s);
    out.sequence = s.elements;
  }
  const BigInt e0 = coefficients(hilbert_series(J, opt)).e[0];
  for (unsigned n = from; n <= to; ++n) {
    ExploreRow row;
    row.n = n;
    Ideal K = ideal_power(J, n);
    std::vector<Polynomial> qn;
    for (const Polynomial& x : out.sequence) {
      Polynomial p = Polynomial::constant(ring->arity(), BigRational(1));
      for (unsigned i = 0; i < n; ++i) p = ring->reduce(p * x);
      qn.push_back(p);
    }
    Ideal q(ring, qn);
    row.reduction_ok = is_reduction(q, K, opt).is_reduction;
    BigInt nd = 1;
    for (unsigned i = 0; i < d; ++i) nd *= n;
    row.e0_ok = BigInt(static_cast<unsigned long>(length(q))) == nd * e0;
    if (row.reduction_ok) {
      row.probe = vv_depth_probe(K, d, qn, opt.n_max, opt);
    } else {
      row.probe.k = d;
      row.probe.verdict = DepthVerdict::fail;
    }
    row.rr_closed = rr_closure(J, n, opt).equals_power();
    out.rows.push_back(row);
  }
  for (std::size_t i = out.rows.size(); i-- > 0;) {
    if (out.rows[i].probe.verdict != DepthVerdict::certified_cm) break;
    out.first_cm = out.rows[i].n;
  }
  if (out.first_cm) out.persists = to - *out.first_cm >= opt.persist;
  return out;
}

}  // namespace relhilb

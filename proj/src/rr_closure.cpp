#include <mutex>
#include <unordered_map>

#include "relhilb/errors.hpp"
#include "relhilb/reduction.hpp"
#include "relhilb/rr_closure.hpp"

namespace relhilb {

namespace {

struct ClosureCache {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, std::vector<std::pair<Ideal, RRClosure>>> table;
};

ClosureCache& closure_cache() {
  static ClosureCache c;
  return c;
}

std::uint64_t closure_key(const Ideal& K, unsigned n) { return K.key() * 1000003u + n; }

RRClosure compute_closure(const Ideal& K, unsigned n, const Options& opt) {
  RRClosure out;
  out.n = n;
  Ideal current = ideal_power(K, n);
  // C_k ⊆ C_(k+1), so C_k serves as the floor of the next colon and C_k = C_(k+1)
  // exactly when that colon has a trivial kernel.
  for (unsigned k = 1; k <= opt.chain_cap; ++k) {
    Ideal next = ideal_colon(ideal_power(K, n + k), ideal_power(K, k), current);
    if (next.same_generators(current)) {
      out.stabilized_k = k - 1;
      out.closure = current;
      out.colength = length(current);
      return out;
    }
    out.new_generators.insert(out.new_generators.end(), next.extra().begin(), next.extra().end());
    current = next;
  }
  throw ChainCapExceeded("Ratliff-Rush chain for power " + std::to_string(n) + " did not stabilize by k = " +
                         std::to_string(opt.chain_cap));
}

}  // namespace

RRClosure rr_closure(const Ideal& K, unsigned n, const Options& opt) {
  if (n == 0) throw UsageError("Ratliff-Rush closure needs n >= 1");
  ClosureCache& c = closure_cache();
  const std::uint64_t key = closure_key(K, n);
  {
    std::lock_guard lock(c.mutex);
    auto it = c.table.find(key);
    if (it != c.table.end())
      for (const auto& [ideal, result] : it->second)
        if (ideal.same_generators(K) && result.n == n) return result;
  }
  RRClosure result = compute_closure(K, n, opt);
  std::lock_guard lock(c.mutex);
  c.table[key].emplace_back(K, result);
  return result;
}

RRMonotonicity rr_monotonicity_check(const Ideal& I, const Ideal& J, unsigned n_max, const Options& opt) {
  if (!local_contains(J, I)) throw NotContained(I.to_string() + " is not contained in " + J.to_string());
  RRMonotonicity out;
  for (unsigned n = 1; n <= n_max; ++n) {
    RRClosure ci = rr_closure(I, n, opt);
    RRClosure cj = rr_closure(J, n, opt);
    bool in = local_contains(cj.closure, ci.closure);
    out.contained.push_back(in);
    out.strict.push_back(in && ci.colength > cj.colength);
    if (!in && !out.first_failure) out.first_failure = n;
  }
  return out;
}

RRSeries rr_series(const Ideal& I, const Ideal& J, unsigned n_max, const Options& opt) {
  ReductionCertificate cert = is_reduction(I, J, opt);
  if (!cert.is_reduction) throw NotAReduction(I.to_string() + " is not a reduction of " + J.to_string());
  const unsigned d = I.ring()->dim();
  validate_dimension(I.ring(), opt);
  RRSeries out;
  unsigned n = std::max({n_max, *cert.reduction_number + d + opt.window, 1u});
  while (true) {
    out.table = FiltrationTable{J, {}};
    for (unsigned k = 0; k <= n; ++k) out.table.values.push_back(rr_closure(J, k + 1, opt).colength);
    try {
      out.series = series_reconstruct(out.table, d, opt.window);
      break;
    } catch (const NonPolynomialWindow&) {
      if (n >= opt.n_max_limit) throw;
      n = std::min(2 * n, opt.n_max_limit);
    }
  }
  HilbertSeries hi = hilbert_series(I, opt, n);
  CoefficientVector et = coefficients(out.series);
  CoefficientVector ei = coefficients(hi);
  if (et.e[0] != ei.e[0]) throw E0Mismatch("e_0 of the Ratliff-Rush filtration differs from e_0(I)");
  IntPoly diff(std::max(out.series.numerator.size(), hi.numerator.size()), 0);
  for (std::size_t k = 0; k < out.series.numerator.size(); ++k) diff[k] += out.series.numerator[k];
  for (std::size_t k = 0; k < hi.numerator.size(); ++k) diff[k] -= hi.numerator[k];
  out.r = divide_by_z_minus_one(diff);
  for (unsigned i = 1; i <= d; ++i) {
    BigInt c = taylor_at_one(out.r, i - 1);
    if (c != et.e[i] - ei.e[i]) throw E0Mismatch("c̃_" + std::to_string(i) + " disagrees with ẽ_i(J) - e_i(I)");
    out.c.push_back(c);
  }
  for (unsigned k = 0; k <= n_max; ++k) {
    long li = static_cast<long>(length(ideal_power(I, k + 1)));
    out.w.emplace_back(li - static_cast<long>(out.table.values[k]));
  }
  return out;
}

RRClosedReport rr_closed_check(const Ideal& K, unsigned n_max, const Options& opt) {
  RRClosedReport out;
  out.n_max = n_max;
  for (unsigned n = 1; n <= n_max; ++n)
    if (!rr_closure(K, n, opt).equals_power()) out.open_powers.push_back(n);
  if (K.flags().integrally_closed.value_or(false) && !out.closed() && out.open_powers.front() == 1)
    throw FlagContradiction(K.to_string() + " is asserted integrally closed but differs from its Ratliff-Rush closure");
  return out;
}

}  // namespace relhilb

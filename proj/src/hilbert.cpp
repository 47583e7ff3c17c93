#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "relhilb/errors.hpp"
#include "relhilb/hilbert.hpp"
#include "relhilb/reduction.hpp"

namespace relhilb {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt evaluate_at_one(const IntPoly& p) {
  BigInt s = 0;
  for (const BigInt& c : p) s += c;
  return s;
}

BigInt taylor_at_one(const IntPoly& p, unsigned i) {
  BigInt s = 0;
  BigInt derivative = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    s += binomial(static_cast<long>(k), i) * p[k];
    BigInt falling = 1;
    for (unsigned j = 0; j < i; ++j) falling *= static_cast<long>(k) - static_cast<long>(j);
    derivative += falling * p[k];
  }
  BigInt fact = 1;
  for (unsigned j = 2; j <= i; ++j) fact *= j;
  if (derivative != s * fact) throw PropertyViolation("derivative at 1 is not divisible by i!");
  return s;
}

IntPoly divide_by_z_minus_one(const IntPoly& p) {
  IntPoly a = p;
  trim(a);
  if (a.empty()) return {};
  IntPoly q(a.size() - 1);
  BigInt carry = 0;
  for (std::size_t k = a.size() - 1; k >= 1; --k) {
    carry += a[k];
    q[k - 1] = carry;
  }
  if (carry + a[0] != 0) throw E0Mismatch("difference of h-polynomials does not vanish at 1");
  trim(q);
  return q;
}

std::vector<BigInt> series_coefficients(const IntPoly& p, unsigned d, std::size_t count) {
  std::vector<BigInt> out(count, 0);
  for (std::size_t k = 0; k < std::min(count, p.size()); ++k) out[k] = p[k];
  for (unsigned j = 0; j < d; ++j)
    for (std::size_t k = 1; k < count; ++k) out[k] += out[k - 1];
  return out;
}

std::string format_poly(const IntPoly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    BigInt a = abs(p[k]);
    if (first) {
      if (p[k] < 0) os << "-";
    } else {
      os << (p[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

std::string format_series(const IntPoly& h, unsigned d, const std::string& var) {
  std::string s = "(" + format_poly(h, var) + ")";
  if (d == 0) return s;
  s += "/(1-" + var + ")";
  if (d > 1) s += "^" + std::to_string(d);
  return s;
}

std::vector<std::size_t> FiltrationTable::first_differences() const {
  std::vector<std::size_t> a;
  for (std::size_t n = 0; n < values.size(); ++n) a.push_back(values[n] - (n == 0 ? 0 : values[n - 1]));
  return a;
}

FiltrationTable hs_table(const Ideal& K, unsigned n_max) {
  FiltrationTable t{K, {}};
  for (unsigned n = 0; n <= n_max; ++n) t.values.push_back(length(ideal_power(K, n + 1)));
  return t;
}

CoefficientVector coefficients(const HilbertSeries& hs) {
  CoefficientVector c;
  for (unsigned i = 0; i <= hs.dim; ++i) c.e.push_back(taylor_at_one(hs.numerator, i));
  return c;
}

BigInt hilbert_polynomial(const CoefficientVector& e, long n) {
  const long d = static_cast<long>(e.e.size()) - 1;
  BigInt s = 0;
  for (long i = 0; i <= d; ++i) {
    BigInt term = e.e[i] * binomial(n + d - i, d - i);
    if (i % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

HilbertSeries series_reconstruct(const FiltrationTable& table, unsigned d, unsigned window) {
  std::vector<BigInt> a;
  for (std::size_t v : table.first_differences()) a.emplace_back(static_cast<unsigned long>(v));
  // (1-z)^d truncated to the table
  std::vector<BigInt> h = a;
  for (unsigned j = 0; j < d; ++j)
    for (std::size_t k = h.size(); k-- > 1;) h[k] -= h[k - 1];
  std::size_t tail = 0;
  while (tail < h.size() && h[h.size() - 1 - tail] == 0) ++tail;
  if (tail < window || tail == h.size())
    throw NonPolynomialWindow("h-polynomial has a zero tail of " + std::to_string(tail) + " < " +
                              std::to_string(window) + " over " + std::to_string(h.size()) + " terms");
  HilbertSeries hs;
  hs.numerator = h;
  trim(hs.numerator);
  hs.dim = d;
  hs.n_max = static_cast<unsigned>(table.values.size() - 1);
  if (evaluate_at_one(hs.numerator) <= 0)
    throw DimensionMismatch("h(1) <= 0: the filtration has dimension below " + std::to_string(d));
  CoefficientVector e = coefficients(hs);
  hs.postulation = static_cast<unsigned>(table.values.size());
  for (std::size_t n = table.values.size(); n-- > 0;) {
    if (hilbert_polynomial(e, static_cast<long>(n)) != BigInt(static_cast<unsigned long>(table.values[n]))) break;
    hs.postulation = static_cast<unsigned>(n);
  }
  return hs;
}

namespace {

HilbertSeries grow(const Ideal& K, const Options& opt, unsigned start) {
  unsigned n = std::max(start, 1u);
  while (true) {
    try {
      return series_reconstruct(hs_table(K, n), K.ring()->dim(), opt.window);
    } catch (const NonPolynomialWindow&) {
      if (n >= opt.n_max_limit) throw;
      n = std::min(2 * n, opt.n_max_limit);
    }
  }
}

}  // namespace

void validate_dimension(const Ring& ring, const Options& opt) {
  static std::mutex mutex;
  static std::set<const RingPresentation*> done;
  {
    std::lock_guard lock(mutex);
    if (done.count(ring.get())) return;
  }
  try {
    grow(Ideal::maximal(ring), opt, opt.n_max);
  } catch (const NonPolynomialWindow& e) {
    throw DimensionMismatch("asserted dimension " + std::to_string(ring->dim()) + " of " + ring->label() +
                            " is below the Krull dimension: " + e.what());
  } catch (const DimensionMismatch& e) {
    throw DimensionMismatch("asserted dimension " + std::to_string(ring->dim()) + " of " + ring->label() +
                            " exceeds the Krull dimension");
  }
  std::lock_guard lock(mutex);
  done.insert(ring.get());
}

HilbertSeries hilbert_series(const Ideal& K, const Options& opt, unsigned n_floor) {
  validate_dimension(K.ring(), opt);
  return grow(K, opt, std::max(opt.n_max, n_floor));
}

RelativeCoefficients relative_coefficients(const Ideal& I, const Ideal& J, const Options& opt) {
  ReductionCertificate cert = is_reduction(I, J, opt);
  if (!cert.is_reduction) throw NotAReduction(I.to_string() + " is not a reduction of " + J.to_string());
  const unsigned d = I.ring()->dim();
  const unsigned n_floor = *cert.reduction_number + d + opt.window;
  RelativeCoefficients out;
  out.hs_i = hilbert_series(I, opt, n_floor);
  out.hs_j = hilbert_series(J, opt, n_floor);
  CoefficientVector ei = coefficients(out.hs_i);
  CoefficientVector ej = coefficients(out.hs_j);
  if (ei.e[0] != ej.e[0])
    throw E0Mismatch("e_0 differs: " + ei.e[0].get_str() + " vs " + ej.e[0].get_str());
  IntPoly diff(std::max(out.hs_i.numerator.size(), out.hs_j.numerator.size()), 0);
  for (std::size_t k = 0; k < out.hs_j.numerator.size(); ++k) diff[k] += out.hs_j.numerator[k];
  for (std::size_t k = 0; k < out.hs_i.numerator.size(); ++k) diff[k] -= out.hs_i.numerator[k];
  out.r = divide_by_z_minus_one(diff);
  for (unsigned i = 1; i <= d; ++i) {
    BigInt c = taylor_at_one(out.r, i - 1);
    if (c != ej.e[i] - ei.e[i]) throw E0Mismatch("c_" + std::to_string(i) + " disagrees with e_i(J) - e_i(I)");
    out.c.push_back(c);
  }
  return out;
}

bool WSeriesCheck::non_decreasing() const {
  for (std::size_t n = 1; n < computed.size(); ++n)
    if (computed[n] < computed[n - 1]) return false;
  return true;
}

WSeriesCheck w_series_check(const Ideal& I, const Ideal& J, unsigned n_max, const Options& opt) {
  RelativeCoefficients rc = relative_coefficients(I, J, opt);
  WSeriesCheck w;
  w.predicted = series_coefficients(rc.r, I.ring()->dim(), n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    long li = static_cast<long>(length(ideal_power(I, n + 1)));
    long lj = static_cast<long>(length(ideal_power(J, n + 1)));
    w.computed.emplace_back(li - lj);
    if (!w.first_mismatch && w.computed.back() != w.predicted[n]) w.first_mismatch = n;
  }
  return w;
}

}  // namespace relhilb

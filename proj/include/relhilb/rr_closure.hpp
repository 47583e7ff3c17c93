#pragma once

#include <optional>
#include <vector>

#include "relhilb/hilbert.hpp"
#include "relhilb/local_ideal.hpp"
#include "relhilb/options.hpp"

namespace relhilb {

struct RRClosure {
  Ideal closure;
  unsigned n = 0;
  unsigned stabilized_k = 0;  // first k with C_k = C_(k+1), C_k = (K^(n+k) : K^k)
  std::size_t colength = 0;
  std::vector<Polynomial> new_generators;  // beyond K^n
  bool equals_power() const { return new_generators.empty(); }
};

/// Ratliff-Rush closure of K^n; K must be m-primary. Throws ChainCapExceeded.
RRClosure rr_closure(const Ideal& K, unsigned n, const Options& opt = {});

struct RRMonotonicity {
  std::vector<bool> contained;  // index n-1
  std::vector<bool> strict;
  std::optional<unsigned> first_failure;
  bool holds() const { return !first_failure.has_value(); }
};

/// Ĩ^n ⊆ J̃^n for n = 1..n_max.
RRMonotonicity rr_monotonicity_check(const Ideal& I, const Ideal& J, unsigned n_max, const Options& opt = {});

struct RRSeries {
  FiltrationTable table;  // λ(A/J̃^(n+1))
  HilbertSeries series;
  IntPoly r;              // (h̃_J - h_I)/(z - 1)
  std::vector<BigInt> c;  // c̃_1..c̃_d
  std::vector<BigInt> w;  // λ(J̃^(n+1)/I^(n+1))
};

/// Requires I a reduction of J. Checks ẽ_0 = e_0 and c̃_i = ẽ_i(J) - e_i(I).
RRSeries rr_series(const Ideal& I, const Ideal& J, unsigned n_max, const Options& opt = {});

struct RRClosedReport {
  std::vector<unsigned> open_powers;  // n with K̃^n != K^n
  unsigned n_max = 0;
  bool closed() const { return open_powers.empty(); }
};

/// Throws FlagContradiction when K is asserted integrally closed but K̃ != K.
RRClosedReport rr_closed_check(const Ideal& K, unsigned n_max, const Options& opt = {});

}  // namespace relhilb

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relhilb/hilbert.hpp"
#include "relhilb/local_ideal.hpp"
#include "relhilb/options.hpp"

namespace relhilb {

struct ReductionCertificate {
  bool is_reduction = false;
  std::optional<unsigned> reduction_number;  // least r with I*J^r = J^(r+1)
  unsigned searched_to = 0;
  std::string note;
};

/// Throws NotContained unless I ⊆ J locally. Inconclusive searches report false with a note.
ReductionCertificate is_reduction(const Ideal& I, const Ideal& J, const Options& opt = {});

struct SuperficialSequence {
  std::vector<Polynomial> elements;
  std::uint64_t seed = 0;
  unsigned window_start = 0;
  unsigned window_end = 0;
  unsigned rounds = 0;        // retry rounds used
  unsigned coefficient_bound = 0;
};

/// Random small-integer combinations of the generators of K. Each element x_i passes
/// (K^(n+1) : x_i) = K^n for n in the window inside A/(x_1..x_(i-1)).
SuperficialSequence superficial_sequence(const Ideal& K, unsigned count, const Options& opt = {});

/// The window condition for a given sequence, element by element in the successive quotients.
bool check_superficial(const Ideal& K, const std::vector<Polynomial>& elements, unsigned window_start,
                       unsigned window_end);

/// The d-element sequence is checked to generate a reduction with λ(A/q) = e_0(K).
Ideal minimal_reduction(const Ideal& K, const Options& opt = {}, SuperficialSequence* sequence = nullptr);

enum class DepthVerdict { certified_cm, pass_window, fail };
std::string to_string(DepthVerdict v);

struct DepthProbeResult {
  unsigned k = 0;
  DepthVerdict verdict = DepthVerdict::fail;
  unsigned checked_from = 1;
  unsigned checked_to = 0;
  std::optional<unsigned> witness_n;        // failing power
  std::optional<unsigned> witness_element;  // 1-based element index, sequential test only
  std::optional<unsigned> reduction_number;
};

/// Valabrega-Valla probe. For k = d: K^n ∩ q = q K^(n-1) for n <= r + 1 by lengths, where
/// q = (x_1..x_d) must be a reduction of K. For k < d: the initial forms of x_1..x_k are
/// tested for regularity in degrees below n_cap, one quotient ring at a time.
DepthProbeResult vv_depth_probe(const Ideal& K, unsigned k, const std::vector<Polynomial>& seq, unsigned n_cap,
                                const Options& opt = {});

/// Re-derives a FAIL witness from scratch: true iff the inequality reproduces.
bool recheck_witness(const Ideal& K, const std::vector<Polynomial>& seq, const DepthProbeResult& result);

struct HMSums {
  std::vector<BigInt> lower_terms;  // λ(K^n/(K^n ∩ q)), n >= 1
  std::vector<BigInt> upper_terms;  // λ(K^n/q K^(n-1)), n >= 1
  BigInt s_lower;
  BigInt s_upper;
  BigInt e1;
  bool cm_consistent() const { return e1 == s_lower; }
  bool depth_consistent() const { return e1 == s_upper; }
};

/// Requires q to be a reduction of K (checked).
HMSums hm_sums(const Ideal& K, const Ideal& q, const Options& opt = {});

struct LinkIdeal {
  Ideal ideal;
  bool degenerate = false;     // (q : m) is the whole ring
  bool minimal_multiplicity = false;  // I^2 = q I verified
};

/// (q : m); throws LinkPropertyFailed if I^2 != q I.
LinkIdeal link_ideal(const Ideal& q, const Ideal& m);

struct ExploreRow {
  unsigned n = 0;
  bool reduction_ok = false;
  bool e0_ok = false;
  DepthProbeResult probe;
  bool rr_closed = false;
};

struct ExploreReport {
  std::vector<ExploreRow> rows;
  std::vector<Polynomial> sequence;  // minimal reduction of J; rows use its n-th powers
  std::optional<unsigned> first_cm;  // first n from which CERTIFIED_CM holds through the range
  bool persists = false;             // first_cm is followed by at least `persist` further rows
};

/// `sequence`, when given, must hold d elements generating a reduction of J (checked);
/// otherwise a minimal reduction is drawn from the seed.
ExploreReport explore_asymptotic(const Ideal& J, unsigned from, unsigned to, const Options& opt = {},
                                 const std::vector<Polynomial>* sequence = nullptr);

}  // namespace relhilb

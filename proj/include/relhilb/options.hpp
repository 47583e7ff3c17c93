#pragma once

#include <cstdint>

namespace relhilb {

/// Knobs shared by the filtration, closure, reduction and verifier layers.
struct Options {
  unsigned n_max = 12;        // Hilbert table length
  unsigned n_max_limit = 30;  // doubling ceiling on NonPolynomialWindow
  unsigned window = 3;        // zero tail required of the h-polynomial
  unsigned chain_cap = 10;    // Ratliff-Rush colon chain
  unsigned reduction_cap = 12;
  unsigned persist = 2;       // persistence window for reductions and eventual CM
  unsigned max_retries = 8;   // superficial element search rounds
  unsigned explore_from = 1;
  unsigned explore_to = 4;
  std::uint64_t seed = 20240611;
};

}  // namespace relhilb

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relhilb/local_ideal.hpp"
#include "relhilb/options.hpp"

namespace relhilb {

/// Integer polynomial, coefficient of z^k at index k, no trailing zeros.
using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p);
BigInt evaluate_at_one(const IntPoly& p);
/// p^(i)(1)/i!, checked against the falling-factorial derivative for exactness.
BigInt taylor_at_one(const IntPoly& p, unsigned i);
/// Exact quotient p/(z-1); throws E0Mismatch when p(1) != 0.
IntPoly divide_by_z_minus_one(const IntPoly& p);
/// First `count` coefficients of p(z)/(1-z)^d.
std::vector<BigInt> series_coefficients(const IntPoly& p, unsigned d, std::size_t count);
/// "(4 + t^2 + t^3)/(1-t)^3"
std::string format_series(const IntPoly& h, unsigned d, const std::string& var = "t");
std::string format_poly(const IntPoly& p, const std::string& var = "z");

struct FiltrationTable {
  Ideal ideal;
  std::vector<std::size_t> values;  // λ(A/K^(n+1)), n = 0..n_max
  std::vector<std::size_t> first_differences() const;  // λ(K^n/K^(n+1))
};

FiltrationTable hs_table(const Ideal& K, unsigned n_max);

struct HilbertSeries {
  IntPoly numerator;
  unsigned dim = 0;
  unsigned postulation = 0;  // least n with H(m) = P(m) for every tabulated m >= n
  unsigned n_max = 0;        // table length actually used
  std::string display(const std::string& var = "t") const { return format_series(numerator, dim, var); }
};

/// Throws NonPolynomialWindow unless (1-z)^d * sum a_n z^n ends in `window` zeros.
HilbertSeries series_reconstruct(const FiltrationTable& table, unsigned d, unsigned window = 3);

struct CoefficientVector {
  std::vector<BigInt> e;  // e_0..e_d
};

CoefficientVector coefficients(const HilbertSeries& hs);

/// Table plus reconstruction, doubling n_max up to the limit on NonPolynomialWindow.
/// Validates the asserted dimension of the ring on first use. The table starts at
/// max(opt.n_max, n_floor) entries.
HilbertSeries hilbert_series(const Ideal& K, const Options& opt = {}, unsigned n_floor = 0);

/// Throws DimensionMismatch unless the series of m has a zero tail over (1-z)^d with h(1) > 0.
void validate_dimension(const Ring& ring, const Options& opt = {});

/// P_K(n) = sum (-1)^i e_i C(n+d-i, d-i).
BigInt hilbert_polynomial(const CoefficientVector& e, long n);

struct RelativeCoefficients {
  std::vector<BigInt> c;  // c_1..c_d
  IntPoly r;
  HilbertSeries hs_i;
  HilbertSeries hs_j;
};

/// Requires I ⊆ J locally with I a reduction of J (checked).
RelativeCoefficients relative_coefficients(const Ideal& I, const Ideal& J, const Options& opt = {});

struct WSeriesCheck {
  std::vector<BigInt> computed;   // λ(J^(n+1)/I^(n+1))
  std::vector<BigInt> predicted;  // coefficients of r(z)/(1-z)^d
  std::optional<unsigned> first_mismatch;
  bool matches() const { return !first_mismatch.has_value(); }
  bool non_decreasing() const;
};

WSeriesCheck w_series_check(const Ideal& I, const Ideal& J, unsigned n_max, const Options& opt = {});

}  // namespace relhilb

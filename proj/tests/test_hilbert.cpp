#include "doctest.h"
#include "relhilb/errors.hpp"
#include "relhilb/hilbert.hpp"
#include "support.hpp"

using namespace relhilb;
using namespace testing;

namespace {

IntPoly P(std::initializer_list<long> c) {
  IntPoly p;
  for (long v : c) p.emplace_back(v);
  return p;
}

std::vector<BigInt> V(std::initializer_list<long> c) { return P(c); }

}  // namespace

TEST_CASE("polynomial helpers") {
  CHECK(format_series(P({4, 0, 1, 1}), 3) == "(4 + t^2 + t^3)/(1-t)^3");
  CHECK(format_series(P({1, 3, 0, 3, -1}), 3) == "(1 + 3t + 3t^3 - t^4)/(1-t)^3");
  CHECK(format_poly(P({0, -2})) == "-2z");
  CHECK(divide_by_z_minus_one(P({-2, 0, 1, 1})) == P({2, 2, 1}));
  CHECK_THROWS_AS(divide_by_z_minus_one(P({1, 1})), E0Mismatch);
  CHECK(taylor_at_one(P({4, 0, 1, 1}), 1) == 5);
  CHECK(taylor_at_one(P({4, 0, 1, 1}), 3) == 1);
  CHECK(series_coefficients(P({1, 1}), 2, 4) == V({1, 3, 5, 7}));
}

TEST_CASE("hs_table examples") {
  Ring r = plane_ring();
  CHECK(hs_table(Ideal::maximal(r), 3).values == std::vector<std::size_t>{1, 3, 6, 10});
  FiltrationTable t = hs_table(ideal(r, {"x^2", "x*y", "y^2"}), 3);
  CHECK(t.values == std::vector<std::size_t>{3, 10, 21, 36});
  CHECK(t.first_differences() == std::vector<std::size_t>{3, 7, 11, 15});
}

TEST_CASE("series_reconstruct examples") {
  Ring r = plane_ring();
  HilbertSeries m2 = hilbert_series(ideal(r, {"x^2", "x*y", "y^2"}));
  CHECK(m2.numerator == P({3, 1}));
  CHECK(coefficients(m2).e == V({4, 1, 0}));
  CHECK(m2.postulation == 0);

  FiltrationTable bad{Ideal::maximal(r), {1, 2, 4, 8, 16, 32}};
  CHECK_THROWS_AS(series_reconstruct(bad, 2), NonPolynomialWindow);

  Ring b = binomial_ring();
  CHECK(hilbert_series(ideal(b, {"X", "Y", "W"})).numerator == P({2, 2}));
  CHECK(hilbert_series(Ideal::maximal(b)).numerator == P({1, 2, 1}));
  CHECK(coefficients(hilbert_series(ideal(b, {"X", "Y", "W"}))).e == V({4, 2, 0}));
}

TEST_CASE("six variable example") {
  Ring r = six_var_ring();
  Ideal I = ideal(r, {"X", "Y", "U", "W"});
  HilbertSeries hi = hilbert_series(I);
  CHECK(hi.numerator == P({4, 0, 1, 1}));
  CHECK(coefficients(hi).e == V({6, 5, 4, 1}));
  HilbertSeries hm = hilbert_series(Ideal::maximal(r));
  CHECK(hm.numerator == P({1, 3, 0, 3, -1}));
  // a table reading of the numerator: coefficients of h/(1-t)
  CHECK(series_coefficients(hi.numerator, 1, 5) == V({4, 4, 5, 6, 6}));
  FiltrationTable t = hs_table(I, 5);
  CHECK(t.first_differences() == std::vector<std::size_t>{4, 12, 25, 44, 69, 100});
}

TEST_CASE("quartic plane example") {
  Ring r = quartic_plane_ring();
  CHECK(coefficients(hilbert_series(ideal(r, {"X", "Y", "W"}))).e[1] == 6);
  CHECK(coefficients(hilbert_series(Ideal::maximal(r))).e[1] == 7);
}

TEST_CASE("Hilbert polynomial agrees with the table past the postulation number") {
  Ring r = quartic_plane_ring();
  Ideal I = ideal(r, {"X", "Y", "W"});
  HilbertSeries hs = hilbert_series(I);
  CoefficientVector e = coefficients(hs);
  FiltrationTable t = hs_table(I, hs.n_max);
  for (unsigned n = hs.postulation; n <= hs.n_max; ++n)
    CHECK(hilbert_polynomial(e, n) == BigInt(static_cast<unsigned long>(t.values[n])));
  if (hs.postulation > 0)
    CHECK(hilbert_polynomial(e, hs.postulation - 1) != BigInt(static_cast<unsigned long>(t.values[hs.postulation - 1])));
}

TEST_CASE("monomial ideals against the lattice oracle") {
  Ring r = plane_ring();
  const std::vector<std::vector<Exps>> cases = {
      {{2, 0}, {0, 3}}, {{3, 0}, {1, 1}, {0, 2}}, {{4, 0}, {3, 1}, {1, 3}, {0, 4}}, {{1, 0}, {0, 5}}};
  for (const auto& gens : cases) {
    Ideal K = monomial_ideal(r, gens);
    const unsigned n_max = 8;
    std::vector<BigInt> a;
    std::size_t prev = 0;
    std::vector<Exps> power = gens;
    for (unsigned n = 0; n <= n_max; ++n) {
      std::size_t c = lattice_colength(power, 2, 64);
      a.emplace_back(static_cast<unsigned long>(c - prev));
      prev = c;
      power = lattice_product(power, gens);
    }
    // h = (1-z)^2 * sum a_n z^n, computed independently
    std::vector<BigInt> h(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      h[k] = a[k];
      if (k >= 1) h[k] -= 2 * a[k - 1];
      if (k >= 2) h[k] += a[k - 2];
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    HilbertSeries hs = hilbert_series(K);
    CHECK(hs.numerator == h);
  }
}

TEST_CASE("dimension validation") {
  Ring wrong_high = RingPresentation::create("high", {"x", "y"}, {"x*y"}, 2);
  CHECK_THROWS_AS(hilbert_series(Ideal::maximal(wrong_high)), DimensionMismatch);
  Ring wrong_low = RingPresentation::create("low", {"x", "y"}, {}, 1);
  CHECK_THROWS_AS(hilbert_series(Ideal::maximal(wrong_low)), DimensionMismatch);
}

TEST_CASE("relative coefficients examples") {
  Ring r = six_var_ring();
  Ideal I = ideal(r, {"X", "Y", "U", "W"});
  Ideal J = ideal(r, {"X", "Y", "W"});
  RelativeCoefficients rc = relative_coefficients(J, I);
  CHECK(rc.c == V({5, 4, 1}));
  CHECK(rc.r == P({2, 2, 1}));
  CHECK_THROWS_AS(relative_coefficients(I, J), NotContained);

  Ring b = binomial_ring();
  Ideal Ib = ideal(b, {"X", "Y", "W"});
  RelativeCoefficients rb = relative_coefficients(Ib, Ideal::maximal(b));
  CHECK(rb.c[0] == BigInt(static_cast<unsigned long>(length(Ib) - length(Ideal::maximal(b)) + 1)));
  CHECK(rb.c[0] == 2);

  Ring p = plane_ring();
  CHECK_THROWS_AS(relative_coefficients(ideal(p, {"x^2"}), Ideal::maximal(p)), NotAReduction);
}

TEST_CASE("relative coefficients in the five variable ring") {
  Ring r = five_var_ring();
  Ideal I = ideal(r, {"X", "Y", "Z", "U"});
  Ideal J = ideal(r, {"X", "Y", "Z", "U", "V^2"});
  CoefficientVector ei = coefficients(hilbert_series(I));
  CoefficientVector ej = coefficients(hilbert_series(J));
  CHECK(ei.e[1] == 4);
  CHECK(ei.e[2] == 1);
  CHECK(ej.e[2] == 1);
  RelativeCoefficients rc = relative_coefficients(I, J);
  CHECK(rc.c[1] == 0);
  CHECK(rc.c[0] == ej.e[1] - 4);
}

TEST_CASE("W series matches lengths") {
  Ring r = six_var_ring();
  WSeriesCheck w = w_series_check(ideal(r, {"X", "Y", "W"}), ideal(r, {"X", "Y", "U", "W"}), 6);
  CHECK(w.matches());
  CHECK(w.non_decreasing());
  CHECK(w.computed[0] == 2);

  Ring b = binomial_ring();
  WSeriesCheck wb = w_series_check(ideal(b, {"X", "Y", "W"}), Ideal::maximal(b), 6);
  CHECK(wb.matches());
  CHECK(wb.computed[0] == 1);
}

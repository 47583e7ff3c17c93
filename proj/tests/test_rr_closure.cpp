#include <random>

#include "doctest.h"
#include "relhilb/errors.hpp"
#include "relhilb/rr_closure.hpp"
#include "support.hpp"

using namespace relhilb;
using namespace testing;

namespace {

// p lies in the Ratliff-Rush closure of K^n iff p * K^k ⊆ K^(n+k) for some k <= k_max.
bool lattice_rr_member(const std::vector<Exps>& gens, unsigned n, const Exps& p, unsigned k_max) {
  for (unsigned k = 1; k <= k_max; ++k) {
    std::vector<Exps> big = lattice_power(gens, n + k);
    bool all = true;
    for (const Exps& g : lattice_power(gens, k)) {
      Exps w(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) w[i] = p[i] + g[i];
      if (!lattice_member(big, w)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("rr_closure examples") {
  Ring r = plane_ring();
  Ideal K = ideal(r, {"x^4", "x^3*y", "x*y^3", "y^4"});
  RRClosure c = rr_closure(K, 1);
  CHECK_FALSE(c.equals_power());
  CHECK(local_equal(c.closure, ideal(r, {"x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"})));
  CHECK(c.colength == 10);
  CHECK(length(K) == 11);

  Ideal ci = ideal(r, {"x^2", "y^2"});
  for (unsigned n = 1; n <= 4; ++n) CHECK(rr_closure(ci, n).equals_power());

  Ring b = binomial_ring();
  Ideal I = ideal(b, {"X", "Y", "W"});
  RRClosure m2 = rr_closure(Ideal::maximal(b), 2);
  CHECK(length(ideal_power(I, 2)) - m2.colength == 3);
  CHECK_THROWS_AS(rr_closure(K, 0), UsageError);
}

TEST_CASE("chain cap") {
  Ring r = plane_ring();
  Options opt;
  opt.chain_cap = 0;
  CHECK_THROWS_AS(rr_closure(ideal(r, {"x^5", "x^4*y", "x*y^4", "y^5"}), 1, opt), ChainCapExceeded);
}

TEST_CASE("rr_closed_check examples") {
  Ring r = plane_ring();
  Ideal K = ideal(r, {"x^4", "x^3*y", "x*y^3", "y^4"});
  RRClosedReport rep = rr_closed_check(K, 4);
  CHECK(rep.open_powers == std::vector<unsigned>{1});
  CHECK(rr_closed_check(ideal(r, {"x^2", "y^2"}), 4).closed());
  for (Ring q : {quartic_plane_ring(), six_var_ring(), five_var_ring(), binomial_ring()})
    CHECK(rr_closed_check(Ideal::maximal(q), 1).closed());
  IdealFlags flags;
  flags.integrally_closed = true;
  CHECK_THROWS_AS(rr_closed_check(K.with_flags(flags), 2), FlagContradiction);
}

TEST_CASE("rr_series examples") {
  Ring r = plane_ring();
  RRSeries s = rr_series(ideal(r, {"x^2", "y^2"}), ideal(r, {"x^2", "x*y", "y^2"}), 6);
  CHECK(s.r == IntPoly{BigInt(1)});
  for (unsigned n = 0; n <= 6; ++n) CHECK(s.w[n] == n + 1);

  Ring b = binomial_ring();
  RRSeries t = rr_series(ideal(b, {"X", "Y", "W"}), Ideal::maximal(b), 6);
  CHECK(t.r == IntPoly{BigInt(1), BigInt(1)});
  CHECK(t.w[0] == 1);
  CHECK(t.w[1] == 3);
  std::vector<BigInt> fit = series_coefficients(t.r, 2, 7);
  CHECK(t.w == fit);

  Ideal m = Ideal::maximal(b);
  CHECK(rr_series(m, m, 4).r.empty());
}

TEST_CASE("Ratliff-Rush monotonicity") {
  Ring r = plane_ring();
  CHECK(rr_monotonicity_check(ideal(r, {"x^2", "y^2"}), ideal(r, {"x^2", "x*y", "y^2"}), 4).holds());
  Ring f = five_var_ring();
  Ideal I = ideal(f, {"X", "Y", "Z", "U"});
  Ideal J = ideal(f, {"X", "Y", "Z", "U", "V^2"});
  CHECK(rr_monotonicity_check(I, J, 4).holds());
  RRMonotonicity same = rr_monotonicity_check(J, J, 4);
  CHECK(same.holds());
  for (bool s : same.strict) CHECK_FALSE(s);
  CHECK_THROWS_AS(rr_monotonicity_check(J, I, 2), NotContained);
}

TEST_CASE("monomial closures against the lattice oracle") {
  Ring r = plane_ring();
  std::mt19937 rng(5);
  std::uniform_int_distribution<unsigned> pure(4, 6), e(1, 4), extra(0, 1);
  int proper = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned a = pure(rng), b = pure(rng);
    std::vector<Exps> gens{{a, 0}, {a - 1, 1}, {1, b - 1}, {0, b}};
    for (unsigned k = extra(rng); k > 0; --k) gens.push_back({e(rng), e(rng)});
    gens = lattice_minimize(gens);
    Ideal K = monomial_ideal(r, gens);
    for (unsigned n = 1; n <= 3; ++n) {
      std::size_t expected = 0;
      lattice_points(2, 6 * n + 12, [&](const Exps& p) { expected += lattice_rr_member(gens, n, p, 5) ? 0 : 1; });
      RRClosure c = rr_closure(K, n);
      CHECK(c.colength == expected);
      CHECK(c.colength <= length(ideal_power(K, n)));
      proper += c.equals_power() ? 0 : 1;
    }
  }
  CHECK(proper > 0);
}

TEST_CASE("idempotence and tail agreement") {
  Ring r = plane_ring();
  Ideal K = ideal(r, {"x^4", "x^3*y", "x*y^3", "y^4"});
  RRClosure c = rr_closure(K, 1);
  Ideal closed(r, c.closure.generators());
  CHECK(rr_closure(closed, 1).equals_power());

  Ring b = binomial_ring();
  Ideal I = ideal(b, {"X", "Y", "W"});
  for (unsigned n = 1; n <= 3; ++n) {
    Ideal again(b, rr_closure(I, n).closure.generators());
    CHECK(rr_closure(again, 1).equals_power());
  }
  RRClosedReport tail = rr_closed_check(K, 6);
  CHECK(tail.open_powers.back() < 6);
}

#include <map>
#include <random>

#include "doctest.h"
#include "relhilb/errors.hpp"
#include "relhilb/groebner.hpp"
#include "relhilb/polynomial_text.hpp"

using namespace relhilb;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kTXY{"t", "x", "y"};

std::vector<Polynomial> polys(std::initializer_list<const char*> texts, const std::vector<std::string>& vars,
                              MonomialOrder order = MonomialOrder::degrevlex()) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, vars, order));
  return out;
}

// Brute-force membership in a monomial ideal: every term divisible by some generator.
bool monomial_ideal_contains(const std::vector<Monomial>& gens, const Polynomial& f) {
  for (const Term& t : f.terms()) {
    bool hit = false;
    for (const Monomial& g : gens) hit = hit || g.divides(t.monomial);
    if (!hit) return false;
  }
  return true;
}

// Dimension of Q[x]/(gens + m^N) by dense Gaussian elimination over all monomial multiples.
std::size_t truncated_colength_oracle(const std::vector<Polynomial>& gens, std::size_t arity, unsigned bound) {
  std::vector<Monomial> monos;
  std::vector<unsigned> e(arity, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == arity) {
      monos.push_back(Monomial::from_exponents(e));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, bound - 1);
  std::map<std::vector<unsigned>, std::size_t> index;
  auto key = [arity](const Monomial& m) {
    std::vector<unsigned> k(arity);
    for (std::size_t i = 0; i < arity; ++i) k[i] = m[i];
    return k;
  };
  for (std::size_t i = 0; i < monos.size(); ++i) index[key(monos[i])] = i;
  std::vector<std::vector<BigRational>> rows;
  for (const Polynomial& g : gens) {
    for (const Monomial& mu : monos) {
      std::vector<BigRational> row(monos.size());
      bool any = false;
      for (const Term& t : g.terms()) {
        Monomial m = t.monomial * mu;
        if (m.degree() >= bound) continue;
        row[index[key(m)]] += t.coeff;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < monos.size() && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      BigRational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < monos.size(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return monos.size() - rank;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto lex = MonomialOrder::lex();
  GroebnerBasis gb = buchberger(polys({"x^2 - y", "y^2 - x"}, kXY, lex), lex);
  REQUIRE(gb.generators.size() == 2);
  CHECK(gb.generators[0] == parse_polynomial("y^4 - y", kXY));
  CHECK(gb.generators[1] == parse_polynomial("x - y^2", kXY));
  CHECK(satisfies_buchberger_criterion(gb));

  for (MonomialOrder order : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
    GroebnerBasis xy = buchberger(polys({"x", "y"}, kXY, order), order);
    CHECK(xy.generators == polys({"y", "x"}, kXY, order));
  }
  GroebnerBasis lin = buchberger(polys({"x + y", "x - y"}, kXY), MonomialOrder::degrevlex());
  CHECK(lin.generators == polys({"y", "x"}, kXY));

  CHECK(buchberger(std::vector<Polynomial>{}, MonomialOrder::degrevlex()).is_zero_ideal());
  CHECK(buchberger(polys({"0"}, kXY), MonomialOrder::degrevlex()).is_zero_ideal());
  CHECK(buchberger(polys({"x^2 + 1", "x"}, kXY), MonomialOrder::degrevlex()).is_unit_ideal());
}

TEST_CASE("buchberger is deterministic and memoized") {
  auto gens = polys({"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}, kXY);
  GroebnerBasis a = buchberger(gens, MonomialOrder::degrevlex());
  std::size_t hits = GroebnerCache::instance().hits();
  std::reverse(gens.begin(), gens.end());
  GroebnerBasis b = buchberger(gens, MonomialOrder::degrevlex());
  CHECK(GroebnerCache::instance().hits() == hits + 1);
  CHECK(a.generators == b.generators);
  CHECK(a.fingerprint == b.fingerprint);
  CHECK(satisfies_buchberger_criterion(a));
  // the classic example from Cox-Little-O'Shea has reduced basis {x^2, xy, y^2 - x/2}
  CHECK(a.generators == polys({"y^2 - 1/2*x", "x*y", "x^2"}, kXY));
}

TEST_CASE("normal_form examples") {
  auto order = MonomialOrder::degrevlex();
  GroebnerBasis x = buchberger(polys({"x"}, kXY), order);
  CHECK(normal_form(parse_polynomial("x^2", kXY), x).is_zero());
  CHECK(normal_form(parse_polynomial("y", kXY), x) == parse_polynomial("y", kXY));
  GroebnerBasis quartic = buchberger(polys({"x^4", "x^3*y", "x*y^3", "y^4"}, kXY), order);
  CHECK(normal_form(parse_polynomial("x^2*y^2", kXY), quartic) == parse_polynomial("x^2*y^2", kXY));
  CHECK_THROWS_AS(normal_form(Polynomial::variable(3, 0), quartic), ArityMismatch);
}

TEST_CASE("count_standard_monomials examples") {
  auto order = MonomialOrder::degrevlex();
  CHECK(count_standard_monomials(buchberger(polys({"x^2", "y^2"}, kXY), order)).count == 4);
  CHECK(count_standard_monomials(buchberger(polys({"x"}, kXY), order)).infinite);
  CHECK(count_standard_monomials(buchberger(polys({"x^2", "x*y", "y^2"}, kXY), order)).count == 3);
  CHECK(count_standard_monomials(buchberger(polys({"x^2 + 1", "x"}, kXY), order)).count == 0);
}

TEST_CASE("eliminate examples") {
  auto inter = eliminate(polys({"t*x", "(1-t)*y"}, kTXY), 1);
  REQUIRE(inter.size() == 1);
  CHECK(inter[0] == parse_polynomial("x*y", kXY));
  CHECK(eliminate(polys({"t"}, kTXY), 1).empty());
  CHECK(eliminate(polys({"t - x"}, kTXY), 1).empty());
}

TEST_CASE("exact_divide") {
  Polynomial f = parse_polynomial("x^3*y - x*y^3", kXY);
  CHECK(exact_divide(f, parse_polynomial("x + y", kXY)) == parse_polynomial("x^2*y - x*y^2", kXY));
  CHECK_THROWS_AS(exact_divide(f, parse_polynomial("x + 1", kXY)), ValidationError);
}

TEST_CASE("membership agrees with the divisibility oracle on monomial ideals") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> exp(0, 4), count(1, 4), coeff(-3, 3);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<Monomial> gens;
    std::vector<Polynomial> gp;
    for (int i = count(rng); i > 0; --i) {
      Monomial m{static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng))};
      gens.push_back(m);
      gp.push_back(Polynomial::term(m, BigRational(1)));
    }
    GroebnerBasis gb = buchberger(gp, MonomialOrder::degrevlex());
    CHECK(satisfies_buchberger_criterion(gb));
    for (int k = 0; k < 10; ++k) {
      std::vector<Term> terms;
      for (int j = 0; j < 3; ++j) {
        Monomial m{static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng))};
        terms.push_back({m, BigRational(coeff(rng))});
      }
      Polynomial f = Polynomial::from_terms(3, terms);
      CHECK(normal_form(f, gb).is_zero() == monomial_ideal_contains(gens, f));
    }
  }
}

TEST_CASE("standard monomial count depends only on leading terms") {
  auto order = MonomialOrder::degrevlex();
  GroebnerBasis gb = buchberger(polys({"x^3 - y^2 + x*y", "y^3 - x^2", "x^2*y"}, kXY), order);
  std::vector<Polynomial> lts;
  for (const Polynomial& g : gb.generators) lts.push_back(Polynomial::term(g.leading_monomial(), BigRational(1)));
  CHECK(count_standard_monomials(gb) == count_standard_monomials(buchberger(lts, order)));
  CHECK(satisfies_buchberger_criterion(gb));
}

TEST_CASE("truncated local bases match dense linear algebra") {
  auto local = MonomialOrder::local_degrevlex();
  std::vector<std::string> xyz{"x", "y", "z"};
  struct Case {
    std::vector<const char*> gens;
    std::vector<std::string> vars;
  };
  std::vector<Case> cases = {
      {{"y^2 - x^3"}, kXY},
      {{"x^2 + y", "x*y"}, kXY},
      {{"x*y - y*z", "x*z + y^3 - z^2", "x", "y"}, xyz},
      {{"x^2 - y^2*z", "x*y^4 - z^2", "y"}, xyz},
      {{"x - x^2 - y^3", "y^2 + x*y*z", "z^2 - x"}, xyz},
  };
  for (const Case& c : cases) {
    std::vector<Polynomial> gens;
    for (const char* t : c.gens) gens.push_back(parse_polynomial(t, c.vars));
    for (unsigned bound = 2; bound <= 7; ++bound) {
      GroebnerBasis gb = buchberger(gens, local, bound);
      CHECK(satisfies_buchberger_criterion(gb));
      CHECK(count_standard_monomials(gb).count == truncated_colength_oracle(gens, c.vars.size(), bound));
    }
  }
  // a unit locally: 1 + x is invertible near the origin
  GroebnerBasis unit = buchberger(polys({"x + x^2 + 1"}, kXY), local, 5);
  CHECK(unit.is_unit_ideal());
  CHECK_THROWS_AS(buchberger(polys({"x"}, kXY), local), ValidationError);
}

#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "relhilb/local_ideal.hpp"

namespace testing {

using namespace relhilb;

inline Ring quartic_plane_ring() {
  static Ring r = RingPresentation::create("quartic_plane_d2", {"X", "Y", "Z", "W"},
                                           {"X*Y - Y*Z", "X*Z + Y^3 - Z^2"}, 2);
  return r;
}

inline Ring six_var_ring() {
  static Ring r = RingPresentation::create("six_var_d3", {"X", "Y", "Z", "U", "V", "W"},
                                           {"Z^2", "Z*U", "Z*V", "U*V", "Y*Z - U^3", "X*Z - V^3"}, 3);
  return r;
}

inline Ring five_var_ring() {
  static Ring r = RingPresentation::create("five_var_d2", {"X", "Y", "Z", "U", "V"},
                                           {"Z^2", "Z*U", "Z*V", "U*V", "Y^2*Z - U^3", "X^2*Z - V^3"}, 2);
  return r;
}

inline Ring binomial_ring() {
  static Ring r = RingPresentation::create("binomial_d2", {"X", "Y", "Z", "W"}, {"X^2 - Y^2*Z", "X*Y^4 - Z^2"}, 2);
  return r;
}

inline Ring plane_ring() {
  static Ring r = RingPresentation::create("plane", {"x", "y"}, {}, 2);
  return r;
}

inline Ring space_ring() {
  static Ring r = RingPresentation::create("space", {"x", "y", "z"}, {}, 3);
  return r;
}

inline Ideal ideal(const Ring& r, std::vector<std::string> gens, std::string name = {}) {
  return Ideal::parse(r, gens, {}, std::move(name));
}

// ---------------------------------------------------------------------------------------
// Monomial oracle: ideals of Q[x_1..x_n] generated by monomials, handled as exponent
// vectors only. Nothing here touches polynomials or Groebner bases.

using Exps = std::vector<unsigned>;

inline bool lattice_divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool lattice_member(const std::vector<Exps>& gens, const Exps& e) {
  return std::any_of(gens.begin(), gens.end(), [&e](const Exps& g) { return lattice_divides(g, e); });
}

/// Calls `visit` on every exponent vector of total degree < bound.
inline void lattice_points(std::size_t n, unsigned bound, const std::function<void(const Exps&)>& visit) {
  Exps e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == n) {
      visit(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  if (bound > 0) rec(0, bound - 1);
}

/// Number of lattice points outside a monomial ideal; `bound` must exceed the socle degree.
inline std::size_t lattice_colength(const std::vector<Exps>& gens, std::size_t n, unsigned bound) {
  std::size_t count = 0;
  lattice_points(n, bound, [&](const Exps& e) { count += lattice_member(gens, e) ? 0 : 1; });
  return count;
}

inline std::vector<Exps> lattice_product(const std::vector<Exps>& a, const std::vector<Exps>& b) {
  std::vector<Exps> out;
  for (const Exps& u : a)
    for (const Exps& v : b) {
      Exps w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
      out.push_back(w);
    }
  return out;
}

/// Drops generators divisible by another one.
inline std::vector<Exps> lattice_minimize(std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (const Exps& g : gens) {
    bool redundant = std::any_of(gens.begin(), gens.end(), [&g](const Exps& h) { return h != g && lattice_divides(h, g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

inline std::vector<Exps> lattice_power(const std::vector<Exps>& a, unsigned n) {
  if (n == 0) return {Exps(a.front().size(), 0)};
  std::vector<Exps> out = a;
  for (unsigned i = 1; i < n; ++i) out = lattice_minimize(lattice_product(out, a));
  return out;
}

inline Ideal monomial_ideal(const Ring& r, const std::vector<Exps>& gens) {
  std::vector<Polynomial> ps;
  for (const Exps& e : gens) ps.push_back(Polynomial::term(Monomial::from_exponents(e), BigRational(1)));
  return Ideal(r, ps);
}

}  // namespace testing

#pragma once
// Independent reference computations shared by the tests and the acceptance run.

#include "brauer/covers.hpp"
#include "brauer/induction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace brauer::oracle {

using Complex = std::complex<long double>;

// Ind_H^G 1 counted on the coset action, class by class
inline ClassFunction coset_character(const GroupPtr &g, const Subgroup &h) {
  auto x = coset_action(g, h);
  std::vector<Cyclotomic> v;
  for (const auto &c : g->classes()) {
    long n = 0;
    for (std::size_t p = 0; p < x.size(); ++p)
      n += x.act(c.representative, static_cast<int>(p)) == static_cast<int>(p);
    v.push_back(Cyclotomic(1, n));
  }
  return ClassFunction(g, v);
}

// sum of coefficient * atom, rebuilt from the atom's own data rather than its stored character
inline ClassFunction rebuild(const GroupPtr &g, const Decomposition &d) {
  const auto &t = g->character_table();
  ClassFunction sum(g);
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    const auto &a = d.atoms[i];
    ClassFunction x(g);
    if (a.kind == GeneratorAtom::Kind::conjugate_pair) {
      auto chi = t.character(a.irreducible);
      x = chi + chi.conj() - ClassFunction::constant(g, 2 * chi.degree());
    } else {
      const auto &h = g->class_representative(a.subgroup_class);
      auto hg = a.tau.group();
      x = induce(g, h, a.tau - ClassFunction::trivial(hg) - determinant_character(a.tau));
    }
    sum += x * Rational(d.coefficients[i]);
  }
  return sum;
}

inline GroupPtr perm_group(int n, const std::vector<std::string> &cycles) {
  std::vector<Perm> gens;
  for (const auto &c : cycles)
    gens.push_back(parse_cycles(c, n));
  if (gens.empty())
    gens.push_back(identity_perm(n));
  return FiniteGroup::build(n, gens);
}

// complex roots of a monic polynomial (coefficients lowest first) by Durand-Kerner
inline std::vector<Complex> numeric_roots(const std::vector<long> &c) {
  std::size_t d = c.size() - 1;
  auto eval = [&](Complex z) {
    Complex v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
      v = v * z + static_cast<long double>(*it);
    return v;
  };
  std::vector<Complex> z(d);
  for (std::size_t i = 0; i < d; ++i)
    z[i] = std::pow(Complex(0.4L, 0.9L), static_cast<long double>(i));
  for (int it = 0; it < 2000; ++it)
    for (std::size_t i = 0; i < d; ++i) {
      Complex den = 1;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i)
          den *= z[i] - z[j];
      z[i] -= eval(z[i]) / den;
    }
  return z;
}

// Galois group of a separable monic integer quartic on its (numerically ordered) roots:
// the smallest H <= S4 and coset t with theta_H(t . roots) a simple integer, theta_H the H-orbit sum of
// y2 y3^2 y4^3 with y = x + 7 (no root is -7 for coefficients in [-6, 6])
inline GroupPtr numeric_galois_quartic(const std::vector<long> &c) {
  auto roots = numeric_roots(c);
  auto s4 = FiniteGroup::from_catalog("S4");
  std::vector<const Subgroup *> subs;
  for (const auto &h : s4->subgroups())
    subs.push_back(&h);
  std::stable_sort(subs.begin(), subs.end(), [](auto *a, auto *b) { return a->order() < b->order(); });
  auto theta = [&](const Subgroup &h, int t) {
    Complex v = 0;
    for (int e : h.elements) {
      const auto &p = s4->element(s4->mul(t, e));
      Complex m = 1;
      for (int i = 0; i < 4; ++i)
        m *= std::pow(roots[p[i]] + 7.0L, static_cast<long double>(i));
      v += m;
    }
    return v;
  };
  for (const auto *h : subs) {
    auto cs = coset_space(s4, *h);
    std::vector<Complex> vals;
    for (int t : cs.representatives)
      vals.push_back(theta(*h, t));
    for (std::size_t k = 0; k < vals.size(); ++k) {
      auto v = vals[k];
      if (std::abs(v.imag()) > 1e-5L || std::abs(v.real() - std::round(v.real())) > 1e-5L)
        continue;
      bool simple = true;
      for (std::size_t j = 0; j < vals.size(); ++j)
        if (j != k && std::abs(vals[j] - v) < 1e-3L)
          simple = false;
      if (!simple)
        continue;
      // Gal = t H t^-1 acting on the root indices
      int t = cs.representatives[k];
      std::vector<Perm> gens;
      for (int e : h->elements)
        gens.push_back(s4->element(s4->conjugate(e, t)));
      return FiniteGroup::build(4, gens);
    }
  }
  throw std::runtime_error("no resolvent has a simple integer root");
}

} // namespace brauer::oracle

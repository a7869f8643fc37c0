#include "brauer/induction.hpp"

#include "brauer/error.hpp"
#include "brauer/normal_form.hpp"

#include <algorithm>

namespace brauer {

std::string GeneratorAtom::describe() const {
  if (kind == Kind::conjugate_pair)
    return "pair(chi" + std::to_string(irreducible) + ")";
  return "ind(H" + std::to_string(subgroup_class) + ", " + quotient + ", p=" + std::to_string(prime) + ", tau=[" +
         tau.to_string() + "])";
}

namespace {

std::vector<Integer> coordinates(const ClassFunction &chi) { return decompose(chi); }

bool in_span(const ZMatrix &rows, const std::vector<Integer> &v) {
  if (rows.rows() == 0)
    return std::all_of(v.begin(), v.end(), [](const Integer &x) { return x == 0; });
  return solve_integer_left(rows, v).has_value();
}

bool all_even(const std::vector<Integer> &v) {
  return std::all_of(v.begin(), v.end(), [](const Integer &x) { return x % 2 == 0; });
}

struct QuotientType {
  std::string name;
  long prime = 0;
};

// classify H/N when it is C2xC2, D8 or D2p; empty name otherwise
QuotientType classify_quotient(const FiniteGroup &h, const Subgroup &n) {
  std::size_t q = h.order() / n.order();
  bool abelian = true;
  for (int a : h.generators())
    for (int b : h.generators())
      if (!n.contains(h.mul(h.mul(a, b), h.inv(h.mul(b, a)))))
        abelian = false;
  std::size_t square_in_n = 0;
  for (std::size_t x = 0; x < h.order(); ++x)
    square_in_n += n.contains(h.mul(static_cast<int>(x), static_cast<int>(x)));
  if (q == 4 && square_in_n == h.order())
    return {"C2xC2", 2};
  if (q == 8 && !abelian && square_in_n == 6 * n.order())
    return {"D8", 2};
  if (q % 2 == 0 && q / 2 > 2 && is_prime(static_cast<long>(q / 2)) && !abelian)
    return {"D" + std::to_string(q), static_cast<long>(q / 2)};
  return {};
}

} // namespace

AtomList generator_atoms(const GroupPtr &gp, std::size_t budget) {
  const auto &g = *gp;
  const auto &table = g.character_table();
  AtomList out;
  ZMatrix span(0, table.size());
  std::size_t examined = 0;
  auto offer = [&](GeneratorAtom atom) {
    if (++examined > budget) {
      out.partial = true;
      return;
    }
    auto v = coordinates(atom.character);
    if (in_span(span, v))
      return;
    span.append_row(v);
    out.atoms.push_back(std::move(atom));
  };

  for (std::size_t k = 0; k < g.subgroup_classes().size() && !out.partial; ++k) {
    const auto &h = g.class_representative(static_cast<int>(k));
    auto hg = g.subgroup_as_group(h);
    const auto &ht = hg->character_table();
    for (std::size_t nk = 0; nk < hg->subgroup_classes().size(); ++nk) {
      if (hg->subgroup_classes()[nk].size() != 1)
        continue;
      const auto &n = hg->class_representative(static_cast<int>(nk));
      auto type = classify_quotient(*hg, n);
      if (type.name.empty())
        continue;
      // irreducibles of H that are trivial on N
      std::vector<std::size_t> linear, two;
      for (std::size_t i = 0; i < ht.size(); ++i) {
        bool trivial_on_n = true;
        for (int x : n.elements)
          if (!(ht.row(i)[hg->class_of(x)] == ht.row(i)[0]))
            trivial_on_n = false;
        if (!trivial_on_n)
          continue;
        if (ht.degree(i) == 1)
          linear.push_back(i);
        else if (ht.degree(i) == 2)
          two.push_back(i);
      }
      std::vector<ClassFunction> taus;
      for (std::size_t i : two)
        taus.push_back(ht.character(i));
      for (std::size_t a = 0; a < linear.size(); ++a)
        for (std::size_t b = a + 1; b < linear.size(); ++b)
          taus.push_back(ht.character(linear[a]) + ht.character(linear[b]));
      for (const auto &tau : taus) {
        ClassFunction x = tau - ClassFunction::trivial(hg) - determinant_character(tau);
        if (all_even(coordinates(x)))
          continue;
        GeneratorAtom atom;
        atom.kind = GeneratorAtom::Kind::dihedral;
        atom.subgroup_class = static_cast<int>(k);
        atom.kernel = n.elements;
        atom.quotient = type.name;
        atom.prime = type.prime;
        atom.tau = tau;
        atom.character = induce(gp, h, x);
        if (atom.character.degree() != 0 || !(virtual_determinant(atom.character) == ClassFunction::trivial(gp)))
          throw InternalError("dihedral atom without degree 0 and trivial determinant");
        offer(std::move(atom));
      }
    }
  }
  for (std::size_t i = 1; i < table.size() && !out.partial; ++i) {
    GeneratorAtom atom;
    atom.kind = GeneratorAtom::Kind::conjugate_pair;
    atom.irreducible = i;
    auto chi = table.character(i);
    atom.character = chi + chi.conj() - ClassFunction::constant(gp, 2 * chi.degree());
    offer(std::move(atom));
  }
  return out;
}

bool Decomposition::verify() const {
  ClassFunction sum(target.group());
  for (std::size_t i = 0; i < atoms.size(); ++i)
    sum += atoms[i].character * Rational(coefficients[i]);
  return (target - sum).is_zero();
}

namespace {

Integer l1(const std::vector<Integer> &c) {
  Integer s = 0;
  for (const auto &x : c)
    s += abs(x);
  return s;
}

bool better(const std::vector<Integer> &a, const std::vector<Integer> &b) {
  Integer la = l1(a), lb = l1(b);
  if (la != lb)
    return la < lb;
  return a > b;
}

// walk the solution coset c + ker toward smaller l1, breaking ties toward larger vectors
std::vector<Integer> reduce_solution(std::vector<Integer> c, const ZMatrix &kernel) {
  std::vector<std::vector<Integer>> moves;
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    auto r = kernel.row(i);
    moves.push_back(r);
    for (auto &x : r)
      x = -x;
    moves.push_back(r);
  }
  std::size_t base = moves.size();
  for (std::size_t a = 0; a < base; ++a)
    for (std::size_t b = a + 1; b < base; ++b) {
      auto s = moves[a];
      for (std::size_t j = 0; j < s.size(); ++j)
        s[j] += moves[b][j];
      moves.push_back(std::move(s));
    }
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto &m : moves) {
      auto t = c;
      for (std::size_t j = 0; j < t.size(); ++j)
        t[j] += m[j];
      if (better(t, c)) {
        c = std::move(t);
        improved = true;
      }
    }
  }
  return c;
}

// target lies in the integer span of the permutation characters
bool is_permutation_combination(const GroupPtr &g, const ClassFunction &rho) {
  ZMatrix m(g->subgroup_classes().size(), g->class_count());
  for (std::size_t k = 0; k < m.rows(); ++k)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(k, c) = static_cast<long>(g->fixed_points(g->class_representative(static_cast<int>(k)), static_cast<int>(c)));
  std::vector<Integer> v;
  for (const auto &x : rho.values()) {
    Rational r = x.to_rational();
    if (r.get_den() != 1)
      return false;
    v.push_back(r.get_num());
  }
  return solve_integer_left(m, v).has_value();
}

} // namespace

Decomposition decompose_permutation_character(const GroupPtr &g, const ClassFunction &rho) {
  if (rho.group() != g)
    throw ValidationError("character lives on a different group");
  std::vector<std::string> failed;
  if (!rho.is_rational() || !is_permutation_combination(g, rho))
    failed.push_back("not an integer combination of permutation characters");
  else {
    if (rho.degree() != 0)
      failed.push_back("degree is " + rho.degree().get_str() + ", not 0");
    if (!(virtual_determinant(rho) == ClassFunction::trivial(g)))
      failed.push_back("determinant is not trivial");
  }
  if (!failed.empty()) {
    std::string msg = "decomposition precondition failed:";
    for (const auto &f : failed)
      msg += " " + f + ";";
    throw ValidationError(msg);
  }
  Decomposition out;
  out.target = rho;
  out.residual = ClassFunction(g);
  if (rho.is_zero())
    return out;
  auto atoms = generator_atoms(g);
  ZMatrix a(0, g->character_table().size());
  for (const auto &atom : atoms.atoms)
    a.append_row(coordinates(atom.character));
  auto sol = solve_integer_left(a, coordinates(rho));
  if (!sol)
    throw InternalError(std::string("no integer decomposition over the generator atoms") +
                        (atoms.partial ? " (atom budget exhausted)" : ""));
  auto c = reduce_solution(*sol, integer_left_kernel(a));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) {
      out.atoms.push_back(atoms.atoms[i]);
      out.coefficients.push_back(c[i]);
    }
  ClassFunction sum(g);
  for (std::size_t i = 0; i < out.atoms.size(); ++i)
    sum += out.atoms[i].character * Rational(out.coefficients[i]);
  out.residual = rho - sum;
  if (!out.residual.is_zero())
    throw InternalError("decomposition left a nonzero residual");
  return out;
}

ClassFunction rho_H(const GroupPtr &g, const Subgroup &h) {
  auto x = coset_action(g, h);
  auto ind = permutation_character(x);
  auto out = ind - sign_character(x) - ClassFunction::constant(g, Rational(static_cast<long>(x.size())) - 1);
  if (out.degree() != 0 || !(virtual_determinant(out) == ClassFunction::trivial(g)))
    throw InternalError("rho_H lacks degree 0 or trivial determinant");
  return out;
}

namespace {

// solve c P = t over F2; rows of P are relations, columns rational orbits
std::optional<std::vector<int>> solve_mod2(const std::vector<std::vector<int>> &p, const std::vector<int> &t) {
  std::size_t m = p.size(), n = t.size();
  // augmented transpose: n equations in m unknowns
  std::vector<std::vector<int>> a(n, std::vector<int>(m + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i)
      a[j][i] = p[i][j] & 1;
    a[j][m] = t[j] & 1;
  }
  std::vector<int> pivot_row(m, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t s = r;
    while (s < n && !a[s][c])
      ++s;
    if (s == n)
      continue;
    std::swap(a[s], a[r]);
    for (std::size_t k = 0; k < n; ++k)
      if (k != r && a[k][c])
        for (std::size_t j = 0; j <= m; ++j)
          a[k][j] ^= a[r][j];
    pivot_row[c] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t k = r; k < n; ++k)
    if (a[k][m])
      return std::nullopt;
  std::vector<int> x(m);
  for (std::size_t c = 0; c < m; ++c)
    if (pivot_row[c] >= 0)
      x[c] = a[pivot_row[c]][m];
  return x;
}

SnTerm lift_atom(const GroupPtr &gp, const GeneratorAtom &atom, const Integer &k) {
  const auto &g = *gp;
  const auto &h = g.class_representative(atom.subgroup_class);
  auto hg = g.subgroup_as_group(h);
  const auto &n = hg->subgroup_from_elements(atom.kernel);
  std::size_t qn = hg->order() / n.order();
  if (qn > 16)
    throw UnsupportedError("quotient of order " + std::to_string(qn) + " is too large to lift a relation from");
  // H/N acting on itself by left multiplication
  auto cs = coset_space(hg, n);
  std::vector<Perm> gens;
  for (int s : hg->generators())
    gens.push_back(cs.gset.action_of(s));
  auto q = FiniteGroup::build(static_cast<int>(qn), gens, atom.quotient);
  std::vector<int> proj(hg->order());
  for (std::size_t j = 0; j < hg->order(); ++j)
    proj[j] = q->index_of(cs.gset.action_of(static_cast<int>(j)));

  // tau - 1 - det tau as a class function of the quotient
  std::vector<Cyclotomic> vals;
  for (const auto &c : q->classes()) {
    int pre = static_cast<int>(std::find(proj.begin(), proj.end(), c.representative) - proj.begin());
    vals.push_back(atom.tau.at_element(pre));
  }
  ClassFunction tq(q, vals);
  ClassFunction xq = tq - ClassFunction::trivial(q) - determinant_character(tq);

  const auto &qt = q->character_table();
  std::vector<int> target;
  for (std::size_t o = 0; o < qt.rational_orbits().size(); ++o) {
    Integer v = inner_product_q(xq, qt.rational_irreducible(o)).get_num();
    target.push_back(static_cast<int>(Integer(((v % 2) + 2) % 2).get_si()));
  }
  auto rels = enumerate_brauer_relations(q);
  std::vector<std::vector<int>> parity;
  for (const auto &r : rels) {
    std::vector<int> row;
    for (const auto &sc : regulator_constants_on_irreducibles(r))
      row.push_back(sc.ord_parity(atom.prime));
    parity.push_back(row);
  }
  auto pick = solve_mod2(parity, target);
  if (!pick)
    throw InternalError("no relation of the quotient " + atom.quotient + " has the required parities");
  BrauerRelation tq_rel = BrauerRelation::zero(q);
  for (std::size_t i = 0; i < rels.size(); ++i)
    if ((*pick)[i])
      tq_rel += rels[i];

  // inflate to H, then read the subgroups as classes of G
  std::vector<Integer> coeffs(g.subgroup_classes().size());
  for (std::size_t c = 0; c < q->subgroup_classes().size(); ++c) {
    if (tq_rel[c] == 0)
      continue;
    const auto &u = q->class_representative(static_cast<int>(c));
    std::vector<int> pre;
    for (std::size_t j = 0; j < hg->order(); ++j)
      if (u.contains(proj[j]))
        pre.push_back(h.elements[j]);
    std::sort(pre.begin(), pre.end());
    coeffs[g.subgroup_from_elements(pre).class_index] += k * tq_rel[c];
  }
  SnTerm term{BrauerRelation(gp, coeffs), atom.prime, atom.character * Rational(k), k, atom};
  if (!term.theta.is_genuine())
    throw InternalError("lifted combination is not a Brauer relation");
  return term;
}

} // namespace

bool SnIdentity::verify() const {
  ClassFunction rhs = ClassFunction::constant(group, n) - sign + sigma * Rational(2);
  for (const auto &t : terms)
    rhs += t.tau;
  return rhs == rho;
}

SnIdentity sn_brauer_identity(int n) {
  if (n < 2 || n > 6)
    throw ValidationError("the symmetric-group identity is available for n = 2..6");
  SnIdentity out;
  out.n = n;
  out.group = FiniteGroup::from_catalog("S" + std::to_string(n));
  const auto &g = *out.group;
  std::vector<std::vector<int>> action(g.order());
  for (std::size_t e = 0; e < g.order(); ++e)
    action[e] = g.element(static_cast<int>(e));
  GSet points(out.group, action);
  out.rho = permutation_character(points) - ClassFunction::trivial(out.group);
  out.sign = sign_character(points);
  ClassFunction target = out.rho - ClassFunction::constant(out.group, n) + out.sign;
  out.decomposition = decompose_permutation_character(out.group, target);
  out.sigma = ClassFunction(out.group);
  const auto &table = g.character_table();
  for (std::size_t i = 0; i < out.decomposition.atoms.size(); ++i) {
    const auto &atom = out.decomposition.atoms[i];
    const auto &c = out.decomposition.coefficients[i];
    if (atom.kind == GeneratorAtom::Kind::conjugate_pair) {
      auto chi = table.character(atom.irreducible);
      if (!chi.is_real())
        throw InternalError("symmetric group with a non-real irreducible");
      out.sigma += (chi - ClassFunction::constant(out.group, chi.degree())) * Rational(c);
    } else {
      out.terms.push_back(lift_atom(out.group, atom, c));
    }
  }
  // each tau must be an admissible choice for its relation and prime
  for (const auto &t : out.terms) {
    auto classes = regulator_constants_on_irreducibles(t.theta);
    for (std::size_t o = 0; o < classes.size(); ++o) {
      Integer m = inner_product_q(t.tau, table.rational_irreducible(o)).get_num();
      if (((m % 2) + 2) % 2 != classes[o].ord_parity(t.prime))
        throw InternalError("lifted relation does not reproduce the tau parities");
    }
  }
  if (!out.verify())
    throw InternalError("symmetric-group identity failed exact verification");
  return out;
}

} // namespace brauer

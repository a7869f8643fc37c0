#include "brauer/regulator.hpp"

#include "brauer/error.hpp"

namespace brauer {

namespace {

int legendre(const Integer &u, long p) {
  Integer r = u % p;
  if (r < 0)
    r += p;
  int s = mpz_legendre(r.get_mpz_t(), Integer(p).get_mpz_t());
  if (s == 0)
    throw InternalError("unit part divisible by p");
  return s;
}

} // namespace

SquareClass SquareClass::over_q(const Rational &x) {
  if (x == 0)
    throw ValidationError("zero has no square class");
  SquareClass c;
  c.rep_ = squarefree_part(x);
  return c;
}

SquareClass SquareClass::over_qp(const Rational &x, long p) { return over_q(x).localize(p); }

SquareClass SquareClass::localize(long p) const {
  if (prime_ != 0)
    throw ValidationError("square class is already local");
  if (!is_prime(p))
    throw ValidationError("localization needs a prime");
  SquareClass c;
  c.prime_ = p;
  Integer u = rep_;
  if (u % p == 0) {
    c.vpar_ = 1;
    u /= p;
  }
  if (p == 2) {
    Integer r = u % 8;
    if (r < 0)
      r += 8;
    c.unit_ = static_cast<int>(r.get_si());
  } else {
    c.unit_ = legendre(u, p);
  }
  c.rep_ = 0;
  return c;
}

int SquareClass::ord_parity(long p) const {
  if (prime_ != 0) {
    if (p != prime_)
      throw ValidationError("ord_p of a class over a different local field");
    return vpar_;
  }
  return rep_ % p == 0 ? 1 : 0;
}

SquareClass operator*(const SquareClass &a, const SquareClass &b) {
  if (a.prime_ != b.prime_)
    throw ValidationError("square classes over different fields");
  SquareClass c;
  c.prime_ = a.prime_;
  if (a.prime_ == 0) {
    c.rep_ = squarefree_part(Rational(a.rep_ * b.rep_));
    return c;
  }
  c.rep_ = 0;
  c.vpar_ = a.vpar_ ^ b.vpar_;
  c.unit_ = a.prime_ == 2 ? (a.unit_ * b.unit_) % 8 : a.unit_ * b.unit_;
  return c;
}

std::string SquareClass::to_string() const {
  if (prime_ == 0)
    return rep_.get_str();
  return "Q_" + std::to_string(prime_) + "(v=" + std::to_string(vpar_) + ",u=" + std::to_string(unit_) + ")";
}

PairingRoute regulator_constant_pairing(const BrauerRelation &theta, const RationalRepModel &model,
                                        const std::optional<QMatrix> &pairing, const std::vector<QMatrix> *bases) {
  const auto &g = *theta.group();
  if (model.group() != theta.group())
    throw ValidationError("relation and model live on different groups");
  if (!check_pseudo_relation(theta, model.character()).holds)
    throw ValidationError("relation is not a pseudo Brauer relation for the model's character");
  QMatrix p = pairing ? *pairing : invariant_pairing(model);
  if (p.rows() != model.dimension() || !p.is_symmetric())
    throw ValidationError("pairing must be a symmetric matrix of the model's size");
  for (int s : g.generators())
    if (!(model.matrix(s).transpose() * p * model.matrix(s) == p))
      throw ValidationError("pairing is not G-invariant");
  auto pos = theta.positive_expanded(), neg = theta.negative_expanded();
  std::vector<int> ids;
  for (int k : pos)
    ids.push_back(g.class_representative(k).id);
  for (int k : neg)
    ids.push_back(g.class_representative(k).id);
  std::vector<QMatrix> own;
  if (!bases) {
    own = invariant_bases(model, ids);
    bases = &own;
  } else {
    if (bases->size() != ids.size())
      throw ValidationError("one invariant basis per expanded subgroup is required");
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto &b = (*bases)[i];
      const auto &h = g.subgroup(ids[i]);
      auto ref = invariant_subspace(model, h);
      if (b.rows() != model.dimension() || b.cols() != ref.cols() || b.rank() != ref.cols())
        throw ValidationError("supplied basis does not span the invariant subspace");
      for (int s : h.generators)
        if (!(model.matrix(s) * b == b))
          throw ValidationError("supplied basis vector is not invariant");
    }
  }
  Rational value = 1;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto &b = (*bases)[i];
    if (b.cols() == 0)
      continue;
    Rational d = (b.transpose() * p * b * make_rational(1, static_cast<long>(g.subgroup(ids[i]).order()))).determinant();
    if (d == 0)
      throw InternalError("pairing is degenerate on an invariant subspace");
    if (i < pos.size())
      value *= d;
    else
      value /= d;
  }
  return {value, SquareClass::over_q(value)};
}

SquareClass regulator_constant_phi(const RealisingMap &phi) {
  Rational d = (phi.phi_star * phi.dual_star).determinant();
  if (d == 0)
    throw ValidationError("map does not realise the relation: pullback is singular");
  return SquareClass::over_q(1 / d);
}

std::vector<SquareClass> regulator_constants_on_irreducibles(const BrauerRelation &theta) {
  const auto &gp = theta.group();
  const auto &t = gp->character_table();
  std::vector<SquareClass> out;
  for (std::size_t o = 0; o < t.rational_orbits().size(); ++o)
    out.push_back(regulator_constant_pairing(theta, RationalRepModel::qirreducible(gp, o)).square_class);
  return out;
}

Integer regulator_constant_sf(const BrauerRelation &theta, const ClassFunction &chi) {
  if (chi.group() != theta.group())
    throw ValidationError("relation and character live on different groups");
  if (!chi.is_rational())
    throw UnsupportedError("regulator constant correction needs a rational-valued character");
  const auto &gp = theta.group();
  const auto &t = gp->character_table();
  auto mult = decompose(chi);
  SquareClass acc = SquareClass::over_q(1);
  for (std::size_t o = 0; o < t.rational_orbits().size(); ++o) {
    Integer m = mult[t.rational_orbits()[o][0]];
    if (m < 0)
      throw ValidationError("character must be a true character");
    if (m % 2 == 1)
      acc = acc * regulator_constant_pairing(theta, RationalRepModel::qirreducible(gp, o)).square_class;
  }
  return acc.representative();
}

namespace {

// order 2q with q an odd prime and a normal cyclic subgroup of order q, nonabelian
bool is_dihedral_prime(const FiniteGroup &g, long q) {
  if (static_cast<long>(g.order()) != 2 * q || q % 2 == 0 || !is_prime(q) || g.is_abelian())
    return false;
  for (const auto &sc : g.subgroup_classes())
    if (static_cast<long>(sc.order) == q && sc.size() == 1)
      return true;
  return false;
}

} // namespace

TauRep tau_rep(const BrauerRelation &theta, long p) {
  if (!is_prime(p))
    throw ValidationError("tau needs a prime");
  const auto &gp = theta.group();
  const auto &t = gp->character_table();
  TauRep out{theta, p, ClassFunction(gp), {}, {}};
  bool rational = t.is_rational();
  if (!rational && !is_dihedral_prime(*gp, p))
    throw UnsupportedError("tau is implemented for rational character tables and for dihedral groups of order 2p at "
                           "p; " + gp->name() + " at p=" + std::to_string(p) + " is neither");
  out.method = rational ? "rational-table" : "dihedral";
  auto classes = regulator_constants_on_irreducibles(theta);
  for (std::size_t o = 0; o < classes.size(); ++o) {
    int par = classes[o].ord_parity(p);
    out.parities.push_back(par);
    if (par)
      // over Q_p the orbit sum stays irreducible here; one constituent realises the pairing
      out.tau += t.character(t.rational_orbits()[o][0]);
  }
  return out;
}

} // namespace brauer

#include "brauer/rational_model.hpp"

#include "brauer/error.hpp"

namespace brauer {

RationalRepModel::RationalRepModel(GroupPtr group, std::vector<QMatrix> element_matrices,
                                   std::optional<QMatrix> pairing)
    : group_(std::move(group)), matrices_(std::move(element_matrices)), pairing_(std::move(pairing)) {
  if (matrices_.size() != group_->order())
    throw ValidationError("rational model needs one matrix per group element");
  dim_ = matrices_[0].rows();
  for (const auto &m : matrices_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw ValidationError("rational model matrices must be square of equal size");
  if (!(matrices_[0] == QMatrix::identity(dim_)))
    throw ValidationError("identity element must act as the identity matrix");
  std::vector<Rational> tr;
  for (const auto &c : group_->classes()) {
    Rational t = matrices_[c.representative].trace();
    for (int e : c.elements)
      if (matrices_[e].trace() != t)
        throw ValidationError("matrix traces are not constant on a conjugacy class");
    tr.push_back(t);
  }
  character_ = ClassFunction::from_rationals(group_, tr);
  if (pairing_) {
    if (pairing_->rows() != dim_ || pairing_->cols() != dim_ || !pairing_->is_symmetric())
      throw ValidationError("attached pairing must be a symmetric matrix of the model's size");
    for (int s : group_->generators())
      if (!(matrices_[s].transpose() * *pairing_ * matrices_[s] == *pairing_))
        throw ValidationError("attached pairing is not G-invariant");
  }
}

namespace {

std::optional<QMatrix> combine(const std::optional<QMatrix> &a, const std::optional<QMatrix> &b, bool tensor) {
  if (!a || !b)
    return std::nullopt;
  return tensor ? QMatrix::kronecker(*a, *b) : QMatrix::direct_sum(*a, *b);
}

} // namespace

RationalRepModel RationalRepModel::from_generators(GroupPtr group, const std::vector<QMatrix> &generator_matrices) {
  const auto &g = *group;
  if (generator_matrices.size() != g.generators().size())
    throw ValidationError("one matrix per group generator is required");
  std::size_t d = generator_matrices.empty() ? 0 : generator_matrices[0].rows();
  if (generator_matrices.empty())
    d = 1;
  std::vector<std::optional<QMatrix>> mats(g.order());
  mats[0] = QMatrix::identity(d);
  std::vector<int> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      int y = g.mul(g.generators()[s], x);
      QMatrix my = generator_matrices[s] * *mats[x];
      if (mats[y]) {
        if (!(*mats[y] == my))
          throw ValidationError("generator matrices do not satisfy the group relations");
      } else {
        mats[y] = std::move(my);
        order.push_back(y);
      }
    }
  }
  std::vector<QMatrix> all;
  for (auto &m : mats)
    all.push_back(std::move(*m));
  return RationalRepModel(std::move(group), std::move(all));
}

RationalRepModel RationalRepModel::permutation(const GSet &x) {
  const auto &g = *x.group();
  std::vector<QMatrix> mats;
  for (std::size_t e = 0; e < g.order(); ++e) {
    QMatrix m(x.size(), x.size());
    for (std::size_t p = 0; p < x.size(); ++p)
      m(x.act(static_cast<int>(e), static_cast<int>(p)), p) = 1;
    mats.push_back(std::move(m));
  }
  return RationalRepModel(x.group(), std::move(mats), QMatrix::identity(x.size()));
}

RationalRepModel RationalRepModel::regular(const GroupPtr &group) {
  return permutation(coset_action(group, group->trivial()));
}

RationalRepModel RationalRepModel::trivial(const GroupPtr &group) {
  return permutation(coset_action(group, group->whole()));
}

RationalRepModel RationalRepModel::linear(const ClassFunction &chi) {
  const auto &g = *chi.group();
  std::vector<QMatrix> mats;
  for (std::size_t e = 0; e < g.order(); ++e) {
    const auto &v = chi.at_element(static_cast<int>(e));
    if (!v.is_rational() || (v.to_rational() != 1 && v.to_rational() != -1))
      throw UnsupportedError("no rational model constructor: linear character is not rational");
    QMatrix m(1, 1);
    m(0, 0) = v.to_rational();
    mats.push_back(std::move(m));
  }
  RationalRepModel out(chi.group(), std::move(mats), QMatrix::identity(1));
  out.verify();
  return out;
}

RationalRepModel RationalRepModel::induced(const GroupPtr &group, const Subgroup &h, const RationalRepModel &inner) {
  const auto &g = *group;
  if (inner.group() != g.subgroup_as_group(h))
    throw ValidationError("inner model does not live on the given subgroup");
  CosetSpace cs = coset_space(group, h);
  std::vector<int> pos(g.order(), -1);
  for (std::size_t j = 0; j < h.order(); ++j)
    pos[h.elements[j]] = static_cast<int>(j);
  std::size_t d = inner.dimension(), k = cs.size();
  std::vector<QMatrix> mats;
  for (std::size_t e = 0; e < g.order(); ++e) {
    QMatrix m(k * d, k * d);
    for (std::size_t j = 0; j < k; ++j) {
      int gt = g.mul(static_cast<int>(e), cs.representatives[j]);
      std::size_t i = static_cast<std::size_t>(cs.coset_of[gt]);
      int hh = g.mul(g.inv(cs.representatives[i]), gt);
      m.set_block(i * d, j * d, inner.matrix(pos[hh]));
    }
    mats.push_back(std::move(m));
  }
  QMatrix p = invariant_pairing(inner);
  QMatrix full(k * d, k * d);
  for (std::size_t j = 0; j < k; ++j)
    full.set_block(j * d, j * d, p);
  return RationalRepModel(group, std::move(mats), full);
}

RationalRepModel RationalRepModel::direct_sum(const RationalRepModel &a, const RationalRepModel &b) {
  if (a.group() != b.group())
    throw ValidationError("direct sum of models on different groups");
  std::vector<QMatrix> mats;
  for (std::size_t e = 0; e < a.group()->order(); ++e)
    mats.push_back(QMatrix::direct_sum(a.matrix(static_cast<int>(e)), b.matrix(static_cast<int>(e))));
  return RationalRepModel(a.group(), std::move(mats), combine(a.natural_pairing(), b.natural_pairing(), false));
}

RationalRepModel RationalRepModel::tensor(const RationalRepModel &a, const RationalRepModel &b) {
  if (a.group() != b.group())
    throw ValidationError("tensor product of models on different groups");
  std::vector<QMatrix> mats;
  for (std::size_t e = 0; e < a.group()->order(); ++e)
    mats.push_back(QMatrix::kronecker(a.matrix(static_cast<int>(e)), b.matrix(static_cast<int>(e))));
  return RationalRepModel(a.group(), std::move(mats), combine(a.natural_pairing(), b.natural_pairing(), true));
}

RationalRepModel RationalRepModel::standard(const GSet &x) {
  if (x.orbits().size() != 1)
    throw ValidationError("standard model needs a transitive G-set");
  std::size_t n = x.size();
  if (n < 2)
    throw ValidationError("standard model of a one-point set is zero-dimensional");
  const auto &g = *x.group();
  std::vector<QMatrix> mats;
  for (std::size_t e = 0; e < g.order(); ++e) {
    QMatrix m(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<Rational> v(n);
      v[x.act(static_cast<int>(e), static_cast<int>(i))] += 1;
      v[x.act(static_cast<int>(e), static_cast<int>(i + 1))] -= 1;
      Rational run = 0;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        run += v[k];
        m(k, i) = run;
      }
    }
    mats.push_back(std::move(m));
  }
  // Gram matrix of e_i - e_{i+1} under the orthonormal permutation basis
  QMatrix gram(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    gram(i, i) = 2;
    if (i + 2 < n)
      gram(i, i + 1) = gram(i + 1, i) = -1;
  }
  return RationalRepModel(x.group(), std::move(mats), gram);
}

RationalRepModel RationalRepModel::qirreducible(const GroupPtr &group, std::size_t orbit) {
  const auto &g = *group;
  const auto &table = g.character_table();
  if (orbit >= table.rational_orbits().size())
    throw ValidationError("rational irreducible index out of range");
  ClassFunction psi = table.rational_irreducible(orbit);
  ClassFunction chi = table.character(table.rational_orbits()[orbit][0]);
  // largest subgroup whose permutation module holds chi exactly once
  const Subgroup *host = nullptr;
  for (std::size_t k = g.subgroup_classes().size(); k-- > 0;) {
    const auto &h = g.class_representative(static_cast<int>(k));
    if (inner_product(permutation_character(group, h), chi) == Cyclotomic(1, 1L)) {
      host = &h;
      break;
    }
  }
  if (!host)
    throw UnsupportedError("no rational model constructor for rational irreducible " + std::to_string(orbit));
  RationalRepModel perm = permutation(coset_action(group, *host));
  if (psi.degree() == 1 && host->order() == g.order())
    return perm;
  std::size_t n = perm.dimension();
  QMatrix e(n, n);
  for (std::size_t x = 0; x < g.order(); ++x) {
    Rational c = psi.at_element(g.inv(static_cast<int>(x))).to_rational();
    if (c != 0)
      e += perm.matrix(static_cast<int>(x)) * c;
  }
  std::vector<std::size_t> piv;
  e.rref(&piv);
  QMatrix basis(n, piv.size());
  for (std::size_t j = 0; j < piv.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      basis(i, j) = e(i, piv[j]);
  QMatrix left = basis.left_inverse();
  std::vector<QMatrix> gens;
  for (int s : g.generators())
    gens.push_back(left * perm.matrix(s) * basis);
  RationalRepModel built = from_generators(group, gens);
  RationalRepModel out(group, built.matrices_, basis.transpose() * basis);
  if (!(out.character() == psi))
    throw InternalError("isotypic projection produced the wrong character");
  return out;
}

RationalRepModel RationalRepModel::for_character(const ClassFunction &chi) {
  if (!chi.is_rational())
    throw UnsupportedError("no rational model constructor: character is not rational-valued");
  const auto &group = chi.group();
  const auto &table = group->character_table();
  auto mult = decompose(chi);
  std::optional<RationalRepModel> out;
  for (std::size_t o = 0; o < table.rational_orbits().size(); ++o) {
    const auto &orb = table.rational_orbits()[o];
    Integer m = mult[orb[0]];
    for (std::size_t i : orb)
      if (mult[i] != m)
        throw InternalError("rational character with unequal Galois-conjugate multiplicities");
    if (m < 0)
      throw UnsupportedError("no rational model for a virtual character");
    if (m == 0)
      continue;
    RationalRepModel piece = qirreducible(group, o);
    for (Integer t = 0; t < m; ++t)
      out = out ? direct_sum(*out, piece) : piece;
  }
  if (!out)
    throw ValidationError("zero character has no model");
  return *out;
}

void RationalRepModel::verify() const {
  const auto &g = *group_;
  for (int s : g.generators())
    for (std::size_t x = 0; x < g.order(); ++x)
      if (!(matrices_[s] * matrices_[x] == matrices_[g.mul(s, static_cast<int>(x))]))
        throw ValidationError("model matrices are not a homomorphism");
}

RationalRepModel RationalRepModel::change_basis(const QMatrix &p) const {
  QMatrix inv = p.inverse();
  std::vector<QMatrix> mats;
  for (const auto &m : matrices_)
    mats.push_back(inv * m * p);
  std::optional<QMatrix> pairing;
  if (pairing_)
    pairing = p.transpose() * *pairing_ * p;
  return RationalRepModel(group_, std::move(mats), pairing);
}

QMatrix invariant_subspace(const RationalRepModel &model, const Subgroup &h) {
  std::size_t d = model.dimension();
  if (h.generators.empty())
    return QMatrix::identity(d);
  QMatrix stacked(0, d);
  for (int s : h.generators)
    stacked = QMatrix::vstack(stacked, model.matrix(s) - QMatrix::identity(d));
  return stacked.nullspace();
}

QMatrix invariant_pairing(const RationalRepModel &model, const std::optional<QMatrix> &seed) {
  std::size_t d = model.dimension();
  if (!seed && model.natural_pairing())
    return *model.natural_pairing();
  QMatrix s = seed ? *seed : QMatrix::identity(d);
  if (s.rows() != d || s.cols() != d)
    throw ValidationError("pairing seed has the wrong size");
  QMatrix sum(d, d);
  const auto &g = *model.group();
  for (std::size_t x = 0; x < g.order(); ++x) {
    const QMatrix &m = model.matrix(static_cast<int>(x));
    sum += m.transpose() * s * m;
  }
  return sum * make_rational(1, static_cast<long>(g.order()));
}

} // namespace brauer

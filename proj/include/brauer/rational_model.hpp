#pragma once

#include "brauer/character.hpp"
#include "brauer/gset.hpp"
#include "brauer/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brauer {

/// Explicit representation over Q: one exact matrix per group element, checked against its character.
class RationalRepModel {
public:
  /// Element matrices for every element in group order; the character is read off the traces.
  /// A known invariant pairing (Gram matrix) may be attached; it is checked for invariance.
  RationalRepModel(GroupPtr group, std::vector<QMatrix> element_matrices,
                   std::optional<QMatrix> pairing = std::nullopt);

  /// Extends generator matrices to all elements and checks every Cayley-graph edge.
  static RationalRepModel from_generators(GroupPtr group, const std::vector<QMatrix> &generator_matrices);

  static RationalRepModel permutation(const GSet &x);
  static RationalRepModel regular(const GroupPtr &group);
  static RationalRepModel trivial(const GroupPtr &group);
  /// One-dimensional model of a rational linear character (values +-1).
  static RationalRepModel linear(const ClassFunction &chi);
  static RationalRepModel induced(const GroupPtr &group, const Subgroup &h, const RationalRepModel &inner);
  static RationalRepModel direct_sum(const RationalRepModel &a, const RationalRepModel &b);
  static RationalRepModel tensor(const RationalRepModel &a, const RationalRepModel &b);
  /// Sum-zero submodule of Q[X] in the basis e_i - e_{i+1}.
  static RationalRepModel standard(const GSet &x);
  /// The Q-irreducible with the given Galois orbit index, cut out of a permutation module.
  static RationalRepModel qirreducible(const GroupPtr &group, std::size_t orbit);
  /// Direct sum of Q-irreducible models realising a rational true character.
  static RationalRepModel for_character(const ClassFunction &chi);

  const GroupPtr &group() const { return group_; }
  std::size_t dimension() const { return dim_; }
  const QMatrix &matrix(int g) const { return matrices_[g]; }
  const ClassFunction &character() const { return character_; }
  /// Invariant pairing inherited from the construction (e.g. the permutation basis is orthonormal).
  const std::optional<QMatrix> &natural_pairing() const { return pairing_; }

  /// Full check: M(s) M(g) = M(sg) for generators s and all g.
  void verify() const;

  /// Same representation in the basis given by the columns of p (V' = P^-1 V P).
  RationalRepModel change_basis(const QMatrix &p) const;

private:
  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<QMatrix> matrices_;
  ClassFunction character_;
  std::optional<QMatrix> pairing_;
};

/// Columns form a basis of V^H.
QMatrix invariant_subspace(const RationalRepModel &model, const Subgroup &h);

/// With a seed S: Gram matrix (1/|G|) sum_g M(g)^T S M(g). Without: the model's natural pairing,
/// or the average of the identity when it has none.
QMatrix invariant_pairing(const RationalRepModel &model, const std::optional<QMatrix> &seed = std::nullopt);

} // namespace brauer

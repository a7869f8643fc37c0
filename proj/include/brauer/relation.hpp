#pragma once

#include "brauer/character.hpp"
#include "brauer/normal_form.hpp"
#include "brauer/rational_model.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

/// Integer combination of subgroup classes, indexed like FiniteGroup::subgroup_classes().
class BrauerRelation {
public:
  BrauerRelation() = default;
  BrauerRelation(GroupPtr group, std::vector<Integer> coefficients);
  static BrauerRelation zero(GroupPtr group);

  const GroupPtr &group() const { return group_; }
  const std::vector<Integer> &coefficients() const { return coeffs_; }
  const Integer &operator[](std::size_t k) const { return coeffs_[k]; }
  bool is_zero() const;

  /// (class index, multiplicity > 0) pairs.
  std::vector<std::pair<int, Integer>> positive() const;
  std::vector<std::pair<int, Integer>> negative() const;
  /// Class indices repeated by multiplicity.
  std::vector<int> positive_expanded() const;
  std::vector<int> negative_expanded() const;

  /// sum c_H Ind_H^G 1.
  ClassFunction permutation_difference() const;
  /// sum c_H [G:H].
  Integer degree_difference() const;
  bool is_genuine() const { return permutation_difference().is_zero(); }

  /// Content 1 and positive first nonzero coefficient.
  BrauerRelation normalized() const;

  BrauerRelation &operator+=(const BrauerRelation &o);
  BrauerRelation &operator-=(const BrauerRelation &o);
  friend BrauerRelation operator+(BrauerRelation a, const BrauerRelation &b) { return a += b; }
  friend BrauerRelation operator-(BrauerRelation a, const BrauerRelation &b) { return a -= b; }
  friend BrauerRelation operator*(const Integer &k, BrauerRelation a);
  friend bool operator==(const BrauerRelation &a, const BrauerRelation &b);

  std::string to_string() const;

private:
  GroupPtr group_;
  std::vector<Integer> coeffs_;
};

/// Best-effort name of a subgroup class: isomorphism type when recognisable, with a suffix for repeated types.
std::string subgroup_label(const FiniteGroup &g, int class_index);
std::vector<std::string> subgroup_labels(const FiniteGroup &g);

/// Rows: subgroup classes; columns: conjugacy classes; entries: fixed points of G/H.
ZMatrix fixed_point_matrix(const FiniteGroup &g);

/// Normalized integer basis of all Brauer relations.
std::vector<BrauerRelation> enumerate_brauer_relations(const GroupPtr &g);

struct PseudoCertificate {
  bool holds = false;
  /// <difference, chi_i> for every irreducible chi_i.
  std::vector<Integer> differences;
  /// Irreducibles occurring in the target.
  std::vector<std::size_t> constituents;
};

/// Whether the permutation difference of the relation avoids every constituent of a self-dual target.
PseudoCertificate check_pseudo_relation(const BrauerRelation &theta, const ClassFunction &target);

/// G-map between direct sums of permutation modules Z[G/A_i] -> Z[G/B_j], stored as an integer matrix
/// (rows: target cosets, columns: source cosets). Blocks are combinations of double-coset maps.
class PermutationModuleMap {
public:
  /// Sources and targets are subgroup ids.
  PermutationModuleMap(GroupPtr group, std::vector<int> sources, std::vector<int> targets, ZMatrix matrix);
  /// Block (i, j) is sum_k coeffs[i][j][k] phi_{A_i g_k B_j}, g_k running over double_cosets(A_i, B_j).
  static PermutationModuleMap from_double_cosets(GroupPtr group, std::vector<int> sources, std::vector<int> targets,
                                                 const std::vector<std::vector<std::vector<Integer>>> &coeffs);
  static PermutationModuleMap identity(GroupPtr group, std::vector<int> subgroups);

  const GroupPtr &group() const { return group_; }
  const std::vector<int> &sources() const { return sources_; }
  const std::vector<int> &targets() const { return targets_; }
  const ZMatrix &matrix() const { return matrix_; }
  std::size_t source_offset(std::size_t i) const { return src_off_[i]; }
  std::size_t target_offset(std::size_t j) const { return tgt_off_[j]; }

  /// Coefficients on the double-coset basis of block (i source, j target).
  std::vector<Integer> block_coefficients(std::size_t i, std::size_t j) const;

  /// Transpose in the orthonormal coset bases.
  PermutationModuleMap dual() const;
  /// this o first.
  PermutationModuleMap after(const PermutationModuleMap &first) const;

  bool is_equivariant() const;

private:
  GroupPtr group_;
  std::vector<int> sources_, targets_;
  std::vector<std::size_t> src_off_, tgt_off_;
  ZMatrix matrix_;
};

/// Bases of V^{H} for a list of subgroup ids (columns of each matrix).
std::vector<QMatrix> invariant_bases(const RationalRepModel &model, const std::vector<int> &subgroups);

/// Pullback phi^*: (+)_j V^{B_j} -> (+)_i V^{A_i}, in the given invariant bases.
QMatrix induced_map_on_invariants(const PermutationModuleMap &phi, const RationalRepModel &model,
                                  const std::vector<QMatrix> &source_bases, const std::vector<QMatrix> &target_bases);
QMatrix induced_map_on_invariants(const PermutationModuleMap &phi, const RationalRepModel &model);

struct SearchOptions {
  std::uint64_t seed = 1;
  int initial_bound = 3;
  int max_bound = 12;
  int tries_per_bound = 64;
};

struct RealisingMap {
  BrauerRelation relation;
  /// Positive side (expanded, by subgroup id) to negative side.
  PermutationModuleMap phi;
  QMatrix phi_star;
  QMatrix dual_star;
  std::vector<QMatrix> source_bases, target_bases;
  int tries = 0;
};

/// Seeded search for an equivariant integer map whose pullback on invariants is invertible.
RealisingMap find_realising_map(const BrauerRelation &theta, const RationalRepModel &model,
                                const SearchOptions &options = {});

} // namespace brauer

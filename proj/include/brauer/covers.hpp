#pragma once

#include "brauer/gset.hpp"

#include <cstddef>
#include <vector>

namespace brauer {

/// An etale algebra of degree n seen through its Galois set: the image Gamma of the Galois action on n points.
class EtaleAlgebraModel {
public:
  explicit EtaleAlgebraModel(GSet points);
  /// Gamma as a permutation group acting on its own points.
  static EtaleAlgebraModel natural(const GroupPtr &gamma);

  const GroupPtr &gamma() const { return points_.group(); }
  const GSet &points() const { return points_; }
  std::size_t degree() const { return points_.size(); }
  std::vector<std::size_t> orbit_sizes() const;
  /// Sorted point-stabilizer subgroup classes, one per orbit; equal exactly for isomorphic Gamma-sets.
  std::vector<int> isomorphism_type() const;

private:
  GSet points_;
};

/// Bij([n], S) with Gamma acting by post-composition and S_n by pre-composition.
class SnClosure {
public:
  const EtaleAlgebraModel &base() const { return base_; }
  std::size_t size() const { return bijections_.size(); }
  /// Bijection k as the image list i -> beta(i).
  const Perm &bijection(int k) const { return bijections_[k]; }
  int index_of(const Perm &beta) const;

  /// gamma . beta
  int left_act(int g, int beta) const;
  /// beta . sigma, sigma a permutation of [n]
  int right_act(int beta, const Perm &sigma) const;

  /// Gamma-orbits on Bij.
  const std::vector<std::vector<int>> &components() const { return components_; }
  std::vector<std::size_t> component_degrees() const;

  /// The full Gamma-set; |Gamma| * n! entries.
  GSet gamma_set() const;

private:
  friend SnClosure sn_closure(const EtaleAlgebraModel &model);
  explicit SnClosure(EtaleAlgebraModel base) : base_(std::move(base)) {}

  EtaleAlgebraModel base_;
  std::vector<Perm> bijections_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::vector<int>> components_;
};

/// Degree at most 7.
SnClosure sn_closure(const EtaleAlgebraModel &model);

/// Bij / U with the residual Gamma-action; U is given by generators on [n].
EtaleAlgebraModel fixed_algebra(const SnClosure &closure, const std::vector<Perm> &u_generators);

/// 1 x S_{n-1}: permutations fixing the first point.
std::vector<Perm> point_stabilizer_generators(int n);
std::vector<Perm> symmetric_generators(int n);
std::vector<Perm> alternating_generators(int n);

} // namespace brauer

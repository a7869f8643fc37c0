#pragma once

#include "brauer/group.hpp"

#include <cstddef>
#include <vector>

namespace brauer {

/// Finite set with a left action of a FiniteGroup, stored as a full image table.
class GSet {
public:
  GSet() = default;
  /// action[g][x] is the image of point x under element g.
  GSet(GroupPtr group, std::vector<std::vector<int>> action);

  const GroupPtr &group() const { return group_; }
  std::size_t size() const { return size_; }
  int act(int g, int x) const { return action_[g][x]; }
  const std::vector<int> &action_of(int g) const { return action_[g]; }

  std::vector<std::vector<int>> orbits() const;
  std::size_t fixed_point_count(int g) const;
  std::vector<int> stabilizer(int x) const;
  std::vector<int> point_stabilizer_classes() const;

  /// Sign of the permutation of the points induced by g.
  int sign(int g) const;

private:
  GroupPtr group_;
  std::size_t size_ = 0;
  std::vector<std::vector<int>> action_;
};

/// Left cosets xH with their minimal-index representatives, ordered by representative.
struct CosetSpace {
  const Subgroup *subgroup = nullptr;
  std::vector<int> representatives;
  std::vector<int> coset_of; ///< element index -> coset number
  GSet gset;

  std::size_t size() const { return representatives.size(); }
};

CosetSpace coset_space(const GroupPtr &g, const Subgroup &h);

/// The transitive G-set G/H.
GSet coset_action(const GroupPtr &g, const Subgroup &h);

/// Disjoint union; the points of b follow those of a.
GSet disjoint_union(const GSet &a, const GSet &b);

struct DoubleCoset {
  int representative = 0;
  std::size_t size = 0;   ///< |HgH'|
  std::size_t index = 0;  ///< [H : H ∩ gH'g^-1] = number of H'-cosets inside HgH'
  std::vector<int> elements;
};

struct DoubleCosetBasis {
  const Subgroup *left = nullptr;
  const Subgroup *right = nullptr;
  std::vector<DoubleCoset> cosets;
  std::vector<int> coset_of; ///< element index -> double coset number
};

/// Double cosets H g H', ordered by minimal element.
DoubleCosetBasis double_cosets(const GroupPtr &g, const Subgroup &h, const Subgroup &h2);

} // namespace brauer

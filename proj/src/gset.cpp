#include "brauer/gset.hpp"

#include "brauer/error.hpp"

#include <algorithm>

namespace brauer {

GSet::GSet(GroupPtr group, std::vector<std::vector<int>> action)
    : group_(std::move(group)), action_(std::move(action)) {
  if (action_.size() != group_->order())
    throw ValidationError("action table needs one row per group element");
  size_ = action_.empty() ? 0 : action_[0].size();
  for (const auto &row : action_) {
    if (row.size() != size_)
      throw ValidationError("ragged action table");
    std::vector<bool> hit(size_, false);
    for (int x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= size_ || hit[x])
        throw ValidationError("group element does not act as a permutation");
      hit[x] = true;
    }
  }
  for (std::size_t x = 0; x < size_; ++x)
    if (action_[0][x] != static_cast<int>(x))
      throw ValidationError("identity must act trivially");
  for (int s : group_->generators())
    for (std::size_t g = 0; g < group_->order(); ++g) {
      int sg = group_->mul(s, static_cast<int>(g));
      for (std::size_t x = 0; x < size_; ++x)
        if (action_[sg][x] != action_[s][action_[g][x]])
          throw ValidationError("action table is not a homomorphism");
    }
}

std::vector<std::vector<int>> GSet::orbits() const {
  std::vector<bool> seen(size_, false);
  std::vector<std::vector<int>> out;
  for (std::size_t x = 0; x < size_; ++x) {
    if (seen[x])
      continue;
    std::vector<int> orbit{static_cast<int>(x)};
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int s : group_->generators()) {
        int y = action_[s][orbit[i]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::size_t GSet::fixed_point_count(int g) const {
  std::size_t c = 0;
  for (std::size_t x = 0; x < size_; ++x)
    if (action_[g][x] == static_cast<int>(x))
      ++c;
  return c;
}

std::vector<int> GSet::stabilizer(int x) const {
  std::vector<int> out;
  for (std::size_t g = 0; g < group_->order(); ++g)
    if (action_[g][x] == x)
      out.push_back(static_cast<int>(g));
  return out;
}

std::vector<int> GSet::point_stabilizer_classes() const {
  std::vector<int> out;
  for (const auto &orbit : orbits())
    out.push_back(group_->subgroup_from_elements(stabilizer(orbit[0])).class_index);
  std::sort(out.begin(), out.end());
  return out;
}

int GSet::sign(int g) const { return perm_sign(action_[g]); }

CosetSpace coset_space(const GroupPtr &g, const Subgroup &h) {
  CosetSpace cs;
  cs.subgroup = &h;
  std::size_t n = g->order();
  cs.coset_of.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (cs.coset_of[x] >= 0)
      continue;
    int c = static_cast<int>(cs.representatives.size());
    cs.representatives.push_back(static_cast<int>(x));
    for (int e : h.elements)
      cs.coset_of[g->mul(static_cast<int>(x), e)] = c;
  }
  std::vector<std::vector<int>> action(n, std::vector<int>(cs.size()));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < cs.size(); ++c)
      action[a][c] = cs.coset_of[g->mul(static_cast<int>(a), cs.representatives[c])];
  cs.gset = GSet(g, std::move(action));
  return cs;
}

GSet coset_action(const GroupPtr &g, const Subgroup &h) { return coset_space(g, h).gset; }

GSet disjoint_union(const GSet &a, const GSet &b) {
  if (a.group() != b.group())
    throw ValidationError("disjoint union of G-sets over different groups");
  std::size_t n = a.group()->order();
  std::vector<std::vector<int>> action(n);
  for (std::size_t g = 0; g < n; ++g) {
    action[g] = a.action_of(static_cast<int>(g));
    for (int y : b.action_of(static_cast<int>(g)))
      action[g].push_back(y + static_cast<int>(a.size()));
  }
  return GSet(a.group(), std::move(action));
}

DoubleCosetBasis double_cosets(const GroupPtr &g, const Subgroup &h, const Subgroup &h2) {
  std::size_t n = g->order();
  if (h.mask.size() != n || h2.mask.size() != n)
    throw ValidationError("subgroup does not belong to this group");
  DoubleCosetBasis out;
  out.left = &h;
  out.right = &h2;
  out.coset_of.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (out.coset_of[x] >= 0)
      continue;
    int c = static_cast<int>(out.cosets.size());
    DoubleCoset dc;
    dc.representative = static_cast<int>(x);
    for (int a : h.elements) {
      int ax = g->mul(a, static_cast<int>(x));
      for (int b : h2.elements) {
        int y = g->mul(ax, b);
        if (out.coset_of[y] < 0) {
          out.coset_of[y] = c;
          dc.elements.push_back(y);
        }
      }
    }
    std::sort(dc.elements.begin(), dc.elements.end());
    dc.size = dc.elements.size();
    dc.index = dc.size / h2.order();
    out.cosets.push_back(std::move(dc));
  }
  return out;
}

} // namespace brauer

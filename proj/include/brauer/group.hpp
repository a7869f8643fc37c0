#pragma once

#include "brauer/permutation.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace brauer {

class CharacterTable;
class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct GroupLimits {
  int max_degree = 16;
  std::size_t max_order = 10000;
  /// Groups up to this order keep a full multiplication table.
  std::size_t table_order = 2048;
};

/// One subgroup of the ambient group, as a sorted list of element indices.
struct Subgroup {
  int id = -1;          ///< position in FiniteGroup::subgroups()
  int class_index = -1; ///< position in FiniteGroup::subgroup_classes()
  std::vector<int> elements;
  std::vector<int> generators;
  std::vector<bool> mask;

  std::size_t order() const { return elements.size(); }
  bool contains(int g) const { return mask[g]; }
};

struct ConjugacyClass {
  int representative = 0;
  std::vector<int> elements;
  int element_order = 1;

  std::size_t size() const { return elements.size(); }
};

struct SubgroupClass {
  int representative = -1; ///< subgroup id
  std::vector<int> members;
  std::size_t order = 0;

  std::size_t size() const { return members.size(); }
};

/// Permutation group with its elements, classes and full subgroup lattice. Immutable once built.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
  static GroupPtr build(int degree, const std::vector<Perm> &generators, std::string name = {},
                        const GroupLimits &limits = {});

  /// Group from the shipped catalog ("S4", "D10", "C2xC2", ...).
  static GroupPtr from_catalog(const std::string &name, const GroupLimits &limits = {});

  /// Accepts a catalog name or a generator list "deg:(1,2),(1,2,3)".
  static GroupPtr parse(const std::string &spec, const GroupLimits &limits = {});

  FiniteGroup(const FiniteGroup &) = delete;
  FiniteGroup &operator=(const FiniteGroup &) = delete;

  const std::string &name() const { return name_; }
  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm> &generator_perms() const { return generator_perms_; }
  const std::vector<int> &generators() const { return generators_; }

  const Perm &element(int i) const { return elements_[i]; }
  int identity() const { return 0; }
  std::optional<int> find(const Perm &p) const;
  int index_of(const Perm &p) const;

  /// Index of element(a) * element(b), applying b first.
  int mul(int a, int b) const;
  int inv(int a) const { return inverse_[a]; }
  int power(int a, long k) const;
  /// x g x^-1
  int conjugate(int g, int x) const { return mul(mul(x, g), inv(x)); }
  int element_order(int a) const { return element_order_[a]; }
  int exponent() const { return exponent_; }

  const std::vector<ConjugacyClass> &classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  int class_of(int g) const { return class_of_[g]; }
  int inverse_class(int k) const;
  /// Class containing the e-th power of the class-k representative.
  int power_class(int k, long e) const;

  /// The subgroup lattice is computed on first use.
  const std::vector<Subgroup> &subgroups() const {
    ensure_lattice();
    return subgroups_;
  }
  const std::vector<SubgroupClass> &subgroup_classes() const {
    ensure_lattice();
    return subgroup_classes_;
  }
  const Subgroup &subgroup(int id) const { return subgroups()[id]; }
  const Subgroup &class_representative(int k) const { return subgroups()[subgroup_classes()[k].representative]; }

  const Subgroup &whole() const { return class_representative(static_cast<int>(subgroup_classes().size()) - 1); }
  const Subgroup &trivial() const { return class_representative(0); }

  /// Subgroup generated by the given element indices.
  const Subgroup &generate(const std::vector<int> &gens) const;
  const Subgroup &generate_perms(const std::vector<Perm> &gens) const;
  /// Throws ValidationError unless the set is a subgroup.
  const Subgroup &subgroup_from_elements(const std::vector<int> &elements) const;
  const Subgroup &conjugate_subgroup(const Subgroup &h, int x) const;
  bool is_normal_in(const Subgroup &n, const Subgroup &h) const;
  bool is_subset(const Subgroup &a, const Subgroup &b) const;

  /// |c ∩ H| for conjugacy class c.
  std::size_t class_intersection(const Subgroup &h, int k) const;
  /// Number of points of G/H fixed by an element of class k.
  std::size_t fixed_points(const Subgroup &h, int k) const;

  /// H as a group in its own right; element j corresponds to h.elements[j].
  GroupPtr subgroup_as_group(const Subgroup &h) const;

  const CharacterTable &character_table() const;

  bool is_abelian() const;

private:
  FiniteGroup() = default;
  void enumerate_elements(const std::vector<Perm> &gens, const GroupLimits &limits);
  void compute_classes();
  void compute_subgroups() const;
  void ensure_lattice() const {
    std::call_once(lattice_once_, [this] { compute_subgroups(); });
  }
  std::vector<bool> closure_mask(const std::vector<int> &gens, std::vector<int> *elements) const;

  std::string name_;
  int degree_ = 1;
  std::vector<Perm> generator_perms_;
  std::vector<int> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  int exponent_ = 1;

  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;

  mutable std::once_flag lattice_once_;
  mutable std::vector<Subgroup> subgroups_;
  mutable std::vector<SubgroupClass> subgroup_classes_;
  mutable std::unordered_map<std::vector<bool>, int> subgroup_index_;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, GroupPtr> subgroup_groups_;
  mutable std::shared_ptr<const CharacterTable> table_cache_;
};

} // namespace brauer

#include "brauer/group.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace brauer {

GroupPtr FiniteGroup::build(int degree, const std::vector<Perm> &generators, std::string name,
                            const GroupLimits &limits) {
  if (degree < 1)
    throw ValidationError("group degree must be at least 1");
  if (degree > limits.max_degree || degree > 16)
    throw ResourceError("degree " + std::to_string(degree) + " exceeds the cap " +
                        std::to_string(std::min(limits.max_degree, 16)));
  for (const auto &g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw ValidationError("generator " + format_cycles(g) + " has the wrong degree");
    std::vector<bool> hit(degree, false);
    for (int x : g) {
      if (x < 0 || x >= degree || hit[x])
        throw ValidationError("generator image list is not a permutation");
      hit[x] = true;
    }
  }
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->name_ = std::move(name);
  g->degree_ = degree;
  g->generator_perms_ = generators;
  g->enumerate_elements(generators, limits);
  g->compute_classes();
  return g;
}

void FiniteGroup::enumerate_elements(const std::vector<Perm> &gens, const GroupLimits &limits) {
  std::unordered_map<std::uint64_t, int> seen;
  std::vector<Perm> found{identity_perm(degree_)};
  seen.emplace(perm_code(found[0]), 0);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto &s : gens) {
      Perm y = compose(found[i], s);
      auto code = perm_code(y);
      if (seen.count(code))
        continue;
      if (found.size() >= limits.max_order)
        throw ResourceError("group order exceeds the cap " + std::to_string(limits.max_order));
      seen.emplace(code, static_cast<int>(found.size()));
      found.push_back(std::move(y));
    }
  std::sort(found.begin(), found.end());
  elements_ = std::move(found);
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(perm_code(elements_[i]), static_cast<int>(i));
  std::size_t n = elements_.size();
  if (n <= limits.table_order) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = index_.at(perm_code(compose(elements_[a], elements_[b])));
  }
  inverse_.resize(n);
  element_order_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    inverse_[a] = index_of(invert(elements_[a]));
    int k = 1;
    for (int x = static_cast<int>(a); x != 0; x = mul(x, static_cast<int>(a)))
      ++k;
    element_order_[a] = k;
  }
  exponent_ = 1;
  for (int o : element_order_)
    exponent_ = std::lcm(exponent_, o);
  for (const auto &s : gens)
    generators_.push_back(index_of(s));
}

std::optional<int> FiniteGroup::find(const Perm &p) const {
  if (static_cast<int>(p.size()) != degree_)
    return std::nullopt;
  auto it = index_.find(perm_code(p));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

int FiniteGroup::index_of(const Perm &p) const {
  auto i = find(p);
  if (!i)
    throw ValidationError("permutation " + format_cycles(p) + " is not in the group");
  return *i;
}

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(perm_code(compose(elements_[a], elements_[b])));
}

int FiniteGroup::power(int a, long k) const {
  long o = element_order_[a];
  long e = ((k % o) + o) % o;
  int r = 0;
  for (long i = 0; i < e; ++i)
    r = mul(r, a);
  return r;
}

void FiniteGroup::compute_classes() {
  std::size_t n = elements_.size();
  class_of_.assign(n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    if (class_of_[g] >= 0)
      continue;
    int k = static_cast<int>(classes_.size());
    ConjugacyClass c;
    c.representative = static_cast<int>(g);
    c.element_order = element_order_[g];
    c.elements.push_back(static_cast<int>(g));
    class_of_[g] = k;
    for (std::size_t i = 0; i < c.elements.size(); ++i)
      for (int s : generators_) {
        int y = conjugate(c.elements[i], s);
        if (class_of_[y] < 0) {
          class_of_[y] = k;
          c.elements.push_back(y);
        }
      }
    std::sort(c.elements.begin(), c.elements.end());
    classes_.push_back(std::move(c));
  }
}

int FiniteGroup::inverse_class(int k) const { return class_of(inv(classes_[k].representative)); }

int FiniteGroup::power_class(int k, long e) const { return class_of(power(classes_[k].representative, e)); }

std::vector<bool> FiniteGroup::closure_mask(const std::vector<int> &gens, std::vector<int> *elements) const {
  std::vector<bool> mask(elements_.size(), false);
  std::vector<int> list{0};
  mask[0] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (int s : gens) {
      int y = mul(list[i], s);
      if (!mask[y]) {
        mask[y] = true;
        list.push_back(y);
      }
    }
  if (elements) {
    std::sort(list.begin(), list.end());
    *elements = std::move(list);
  }
  return mask;
}

void FiniteGroup::compute_subgroups() const {
  std::size_t n = elements_.size();
  std::vector<std::vector<int>> class_members;
  std::deque<int> queue;

  auto add_class = [&](const std::vector<int> &gens) {
    std::vector<int> elems;
    auto mask = closure_mask(gens, &elems);
    if (subgroup_index_.count(mask))
      return;
    int cls = static_cast<int>(class_members.size());
    class_members.emplace_back();
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<bool> cm(n, false);
      for (int e : elems)
        cm[conjugate(e, static_cast<int>(x))] = true;
      if (subgroup_index_.count(cm))
        continue;
      Subgroup s;
      s.id = static_cast<int>(subgroups_.size());
      s.class_index = cls;
      for (std::size_t i = 0; i < n; ++i)
        if (cm[i])
          s.elements.push_back(static_cast<int>(i));
      for (int g : gens)
        s.generators.push_back(conjugate(g, static_cast<int>(x)));
      s.mask = cm;
      subgroup_index_.emplace(std::move(cm), s.id);
      class_members[cls].push_back(s.id);
      subgroups_.push_back(std::move(s));
    }
    queue.push_back(class_members[cls][0]);
  };

  add_class({});
  while (!queue.empty()) {
    int h = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < n; ++g) {
      if (subgroups_[h].mask[g])
        continue;
      std::vector<int> gens = subgroups_[h].generators;
      gens.push_back(static_cast<int>(g));
      add_class(gens);
    }
  }

  std::vector<SubgroupClass> classes;
  for (auto &members : class_members) {
    SubgroupClass c;
    c.members = members;
    c.order = subgroups_[members[0]].order();
    c.representative = *std::min_element(members.begin(), members.end(), [&](int a, int b) {
      return subgroups_[a].elements < subgroups_[b].elements;
    });
    std::sort(c.members.begin(), c.members.end());
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [&](const SubgroupClass &a, const SubgroupClass &b) {
    if (a.order != b.order)
      return a.order < b.order;
    return subgroups_[a.representative].elements < subgroups_[b.representative].elements;
  });
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (int id : classes[k].members)
      subgroups_[id].class_index = static_cast<int>(k);
  subgroup_classes_ = std::move(classes);
}

const Subgroup &FiniteGroup::generate(const std::vector<int> &gens) const {
  ensure_lattice();
  auto mask = closure_mask(gens, nullptr);
  return subgroups_[subgroup_index_.at(mask)];
}

const Subgroup &FiniteGroup::generate_perms(const std::vector<Perm> &gens) const {
  std::vector<int> idx;
  for (const auto &p : gens)
    idx.push_back(index_of(p));
  return generate(idx);
}

const Subgroup &FiniteGroup::subgroup_from_elements(const std::vector<int> &elements) const {
  ensure_lattice();
  std::vector<bool> mask(elements_.size(), false);
  for (int e : elements) {
    if (e < 0 || static_cast<std::size_t>(e) >= elements_.size())
      throw ValidationError("element index out of range");
    mask[e] = true;
  }
  auto it = subgroup_index_.find(mask);
  if (it == subgroup_index_.end())
    throw ValidationError("element set is not a subgroup");
  return subgroups_[it->second];
}

const Subgroup &FiniteGroup::conjugate_subgroup(const Subgroup &h, int x) const {
  ensure_lattice();
  std::vector<bool> mask(elements_.size(), false);
  for (int e : h.elements)
    mask[conjugate(e, x)] = true;
  return subgroups_[subgroup_index_.at(mask)];
}

bool FiniteGroup::is_subset(const Subgroup &a, const Subgroup &b) const {
  for (int e : a.elements)
    if (!b.mask[e])
      return false;
  return true;
}

bool FiniteGroup::is_normal_in(const Subgroup &n, const Subgroup &h) const {
  if (!is_subset(n, h))
    return false;
  for (int x : h.generators)
    for (int g : n.generators)
      if (!n.mask[conjugate(g, x)])
        return false;
  return true;
}

std::size_t FiniteGroup::class_intersection(const Subgroup &h, int k) const {
  std::size_t c = 0;
  for (int e : classes_[k].elements)
    if (h.mask[e])
      ++c;
  return c;
}

std::size_t FiniteGroup::fixed_points(const Subgroup &h, int k) const {
  return order() / h.order() * class_intersection(h, k) / classes_[k].size();
}

GroupPtr FiniteGroup::subgroup_as_group(const Subgroup &h) const {
  if (h.order() == order())
    return shared_from_this();
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = subgroup_groups_.find(h.id);
  if (it != subgroup_groups_.end())
    return it->second;
  std::vector<Perm> gens;
  for (int g : h.generators)
    gens.push_back(elements_[g]);
  GroupLimits limits;
  GroupPtr sub = build(degree_, gens, {}, limits);
  if (sub->order() != h.order())
    throw InternalError("subgroup generators do not generate the subgroup");
  subgroup_groups_.emplace(h.id, sub);
  return sub;
}

bool FiniteGroup::is_abelian() const {
  for (int a : generators_)
    for (int b : generators_)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

} // namespace brauer

#include "brauer/catalog.hpp"
#include "brauer/error.hpp"
#include "brauer/group.hpp"
#include "brauer/gset.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace brauer;

namespace {

// Oracle: all subgroups by testing closure of every subset (only for tiny groups).
std::set<std::vector<int>> brute_force_subgroups(const FiniteGroup &g) {
  std::set<std::vector<int>> out;
  std::size_t n = g.order();
  for (unsigned long bits = 1; bits < (1UL << n); ++bits) {
    if (!(bits & 1))
      continue;
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (bits >> i & 1)
        s.push_back(static_cast<int>(i));
    bool closed = true;
    for (int a : s)
      for (int b : s)
        if (!(bits >> g.mul(a, b) & 1))
          closed = false;
    if (closed)
      out.insert(s);
  }
  return out;
}

std::size_t conjugacy_class_count_of_subgroups(const FiniteGroup &g, const std::set<std::vector<int>> &subs) {
  std::set<std::vector<int>> seen;
  std::size_t classes = 0;
  for (const auto &s : subs) {
    if (seen.count(s))
      continue;
    ++classes;
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::vector<int> c;
      for (int e : s)
        c.push_back(g.conjugate(e, static_cast<int>(x)));
      std::sort(c.begin(), c.end());
      seen.insert(c);
    }
  }
  return classes;
}

} // namespace

TEST_CASE("build_group examples") {
  auto s3 = FiniteGroup::from_catalog("S3");
  CHECK(s3->order() == 6);
  CHECK(s3->class_count() == 3);
  CHECK(s3->subgroup_classes().size() == 4);
  auto v4 = FiniteGroup::from_catalog("C2xC2");
  CHECK(v4->order() == 4);
  CHECK(v4->class_count() == 4);
  CHECK(v4->subgroup_classes().size() == 5);
  auto triv = FiniteGroup::build(1, {});
  CHECK(triv->order() == 1);
  CHECK(triv->class_count() == 1);
  CHECK(triv->subgroup_classes().size() == 1);
}

TEST_CASE("build_group errors") {
  CHECK_THROWS_AS(FiniteGroup::parse("3:(1,2,4)"), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::parse("3:(1,2"), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::parse("Nope"), ValidationError);
  GroupLimits small;
  small.max_order = 100;
  CHECK_THROWS_AS(FiniteGroup::from_catalog("S5", small), ResourceError);
  CHECK_THROWS_AS(FiniteGroup::parse("17:(1,2)"), ResourceError);
}

TEST_CASE("element order, identity and inverses") {
  for (const auto &name : {"S4", "D10", "A5", "C12"}) {
    auto g = FiniteGroup::from_catalog(name);
    CHECK(is_identity(g->element(0)));
    for (std::size_t i = 1; i < g->order(); ++i)
      CHECK(g->element(i - 1) < g->element(i));
    for (std::size_t a = 0; a < g->order(); ++a)
      CHECK(g->mul(static_cast<int>(a), g->inv(static_cast<int>(a))) == 0);
    std::size_t sum = 0;
    for (const auto &c : g->classes()) {
      CHECK(g->order() % c.size() == 0);
      sum += c.size();
    }
    CHECK(sum == g->order());
  }
  CHECK(FiniteGroup::from_catalog("S5")->order() == 120);
  CHECK(FiniteGroup::from_catalog("A6")->order() == 360);
}

TEST_CASE("subgroup class lists match brute force") {
  for (const auto &name : {"S3", "C2xC2", "D10", "D8", "C6", "A4", "C4"}) {
    auto g = FiniteGroup::from_catalog(name);
    auto subs = brute_force_subgroups(*g);
    CHECK(g->subgroups().size() == subs.size());
    CHECK(g->subgroup_classes().size() == conjugacy_class_count_of_subgroups(*g, subs));
    for (const auto &s : g->subgroups())
      CHECK(subs.count(s.elements) == 1);
  }
  auto d10 = FiniteGroup::from_catalog("D10");
  std::vector<std::size_t> orders;
  for (const auto &c : d10->subgroup_classes())
    orders.push_back(c.order);
  CHECK(orders == std::vector<std::size_t>{1, 2, 5, 10});
}

TEST_CASE("known subgroup class counts") {
  CHECK(FiniteGroup::from_catalog("S4")->subgroup_classes().size() == 11);
  CHECK(FiniteGroup::from_catalog("S5")->subgroup_classes().size() == 19);
  CHECK(FiniteGroup::from_catalog("A5")->subgroup_classes().size() == 9);
  CHECK(FiniteGroup::from_catalog("D8")->subgroup_classes().size() == 8);
}

TEST_CASE("subgroup classes are ordered and closed under conjugation") {
  auto g = FiniteGroup::from_catalog("S4");
  const auto &cls = g->subgroup_classes();
  for (std::size_t k = 0; k + 1 < cls.size(); ++k) {
    const auto &a = g->class_representative(static_cast<int>(k));
    const auto &b = g->class_representative(static_cast<int>(k + 1));
    CHECK((a.order() < b.order() || (a.order() == b.order() && a.elements < b.elements)));
  }
  for (const auto &s : g->subgroups())
    for (std::size_t x = 0; x < g->order(); ++x) {
      const auto &c = g->conjugate_subgroup(s, static_cast<int>(x));
      CHECK(c.class_index == s.class_index);
    }
  for (const auto &c : cls) {
    const auto &rep = g->subgroup(c.representative);
    for (int m : c.members)
      CHECK(rep.elements <= g->subgroup(m).elements);
  }
}

TEST_CASE("double cosets") {
  auto s3 = FiniteGroup::from_catalog("S3");
  const auto &c2 = s3->class_representative(1);
  CHECK(double_cosets(s3, c2, c2).cosets.size() == 2);
  CHECK(double_cosets(s3, s3->whole(), s3->whole()).cosets.size() == 1);
  CHECK(double_cosets(s3, s3->trivial(), s3->trivial()).cosets.size() == 6);
  for (const auto &name : {"S4", "D12", "A4"}) {
    auto g = FiniteGroup::from_catalog(name);
    for (const auto &a : g->subgroup_classes())
      for (const auto &b : g->subgroup_classes()) {
        const auto &h = g->subgroup(a.representative);
        const auto &h2 = g->subgroup(b.representative);
        auto dc = double_cosets(g, h, h2);
        std::size_t total = 0;
        for (const auto &d : dc.cosets) {
          // oracle: H ∩ gH'g^-1 computed directly
          std::size_t inter = 0;
          for (int e : h.elements)
            if (h2.contains(g->conjugate(e, g->inv(d.representative))))
              ++inter;
          CHECK(d.index == h.order() / inter);
          total += d.index * h2.order();
        }
        CHECK(total == g->order());
      }
  }
}

TEST_CASE("coset actions and Burnside counting") {
  auto s3 = FiniteGroup::from_catalog("S3");
  CHECK(coset_action(s3, s3->class_representative(1)).size() == 3);
  CHECK(coset_action(s3, s3->trivial()).size() == 6);
  auto v4 = FiniteGroup::from_catalog("C2xC2");
  const auto &a = v4->class_representative(1);
  auto x = coset_action(v4, a);
  CHECK(x.size() == 2);
  for (int e : a.elements)
    CHECK(x.fixed_point_count(e) == 2);
  for (const auto &name : {"S4", "D10", "A4"}) {
    auto g = FiniteGroup::from_catalog(name);
    GSet all = coset_action(g, g->class_representative(1));
    for (std::size_t k = 2; k < g->subgroup_classes().size(); ++k)
      all = disjoint_union(all, coset_action(g, g->class_representative(static_cast<int>(k))));
    std::size_t fix = 0;
    for (std::size_t e = 0; e < g->order(); ++e)
      fix += all.fixed_point_count(static_cast<int>(e));
    CHECK(fix % g->order() == 0);
    CHECK(all.orbits().size() == fix / g->order());
    for (std::size_t k = 0; k < g->subgroup_classes().size(); ++k) {
      const auto &h = g->class_representative(static_cast<int>(k));
      auto cs = coset_action(g, h);
      for (std::size_t c = 0; c < g->class_count(); ++c)
        CHECK(cs.fixed_point_count(g->classes()[c].representative) == g->fixed_points(h, static_cast<int>(c)));
    }
  }
}

TEST_CASE("catalog") {
  auto names = catalog_names();
  CHECK(std::find(names.begin(), names.end(), "D24") != names.end());
  CHECK(std::find(names.begin(), names.end(), "A6") != names.end());
  CHECK(names.front() == "C1");
  for (const auto &e : catalog_entries()) {
    auto g = FiniteGroup::from_catalog(e.name);
    if (e.name[0] == 'D')
      CHECK(g->order() == static_cast<std::size_t>(std::stoi(e.name.substr(1))));
    if (e.name[0] == 'C' && e.name != "C2xC2")
      CHECK(g->order() == static_cast<std::size_t>(std::stoi(e.name.substr(1))));
  }
}

TEST_CASE("parse generator specs and subgroup groups") {
  auto g = FiniteGroup::parse("4:(1,2,3,4),(1,3)");
  CHECK(g->order() == 8);
  const auto &h = g->class_representative(3);
  auto hg = g->subgroup_as_group(h);
  CHECK(hg->order() == h.order());
  for (std::size_t j = 0; j < hg->order(); ++j)
    CHECK(hg->element(static_cast<int>(j)) == g->element(h.elements[j]));
}

#include "brauer/catalog.hpp"
#include "brauer/error.hpp"
#include "brauer/rational_model.hpp"

#include <doctest.h>

#include <random>

using namespace brauer;

namespace {

GroupPtr cat(const std::string &name) { return FiniteGroup::from_catalog(name); }

const Subgroup &class_of_order(const FiniteGroup &g, std::size_t order) {
  for (const auto &sc : g.subgroup_classes())
    if (sc.order == order)
      return g.subgroup(sc.representative);
  throw std::runtime_error("no subgroup of that order");
}

bool positive_definite(const QMatrix &p) {
  for (std::size_t k = 1; k <= p.rows(); ++k)
    if (p.block(0, 0, k, k).determinant() <= 0)
      return false;
  return true;
}

} // namespace

TEST_CASE("basic models of S3") {
  auto s3 = cat("S3");
  auto x = coset_action(s3, class_of_order(*s3, 2));
  auto perm = RationalRepModel::permutation(x);
  CHECK(perm.dimension() == 3);
  CHECK(perm.character() == permutation_character(x));
  for (std::size_t g = 0; g < s3->order(); ++g)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const auto &v = perm.matrix(static_cast<int>(g))(i, j);
        CHECK((v == 0 || v == 1));
      }
  CHECK(invariant_pairing(perm) == QMatrix::identity(3));

  auto std2 = RationalRepModel::standard(x);
  const auto &t = s3->character_table();
  CHECK(std2.dimension() == 2);
  CHECK(std2.character() == t.character(2));
  CHECK(invariant_pairing(std2) == QMatrix::from_rows({{2, -1}, {-1, 2}}));
  CHECK(invariant_subspace(std2, class_of_order(*s3, 2)).cols() == 1);
  CHECK(invariant_subspace(std2, class_of_order(*s3, 3)).cols() == 0);
  CHECK(invariant_subspace(std2, s3->trivial()).cols() == 2);

  auto triv = RationalRepModel::trivial(s3);
  CHECK(triv.dimension() == 1);
  CHECK(invariant_pairing(triv) == QMatrix::identity(1));
  auto sign = RationalRepModel::linear(t.character(1));
  CHECK(sign.character() == t.character(1));

  auto reg = RationalRepModel::regular(cat("C2xC2"));
  CHECK(reg.dimension() == 4);
}

TEST_CASE("model constructors reject bad input") {
  auto s3 = cat("S3");
  std::vector<QMatrix> gens;
  for (std::size_t i = 0; i < s3->generators().size(); ++i)
    gens.push_back(QMatrix::identity(2) * Rational(2));
  CHECK_THROWS_AS(RationalRepModel::from_generators(s3, gens), ValidationError);
  auto c3 = cat("C3");
  CHECK_THROWS_AS(RationalRepModel::linear(c3->character_table().character(1)), UnsupportedError);
  CHECK_THROWS_AS(RationalRepModel::for_character(c3->character_table().character(1)), UnsupportedError);
  const auto &s3t = s3->character_table();
  CHECK_THROWS_AS(RationalRepModel::for_character(s3t.character(1) - s3t.character(0)), UnsupportedError);
}

TEST_CASE("rational irreducible models exist on the catalog and have consistent invariants") {
  for (const auto &name : catalog_names()) {
    auto g = cat(name);
    if (g->order() > 48)
      continue;
    CAPTURE(name);
    const auto &t = g->character_table();
    for (std::size_t o = 0; o < t.rational_orbits().size(); ++o) {
      auto m = RationalRepModel::qirreducible(g, o);
      m.verify();
      CHECK(m.character() == t.rational_irreducible(o));
      auto p = invariant_pairing(m);
      CHECK(p.is_symmetric());
      CHECK(positive_definite(p));
      for (int s : g->generators())
        CHECK(m.matrix(s).transpose() * p * m.matrix(s) == p);
      for (const auto &sc : g->subgroup_classes()) {
        const auto &h = g->subgroup(sc.representative);
        auto res = restrict_to(m.character(), h);
        auto inv = invariant_subspace(m, h);
        CHECK(Rational(static_cast<long>(inv.cols())) ==
              inner_product_q(res, ClassFunction::trivial(g->subgroup_as_group(h))));
        for (int s : h.generators)
          CHECK(m.matrix(s) * inv == inv);
      }
    }
  }
}

TEST_CASE("derived model constructors track characters") {
  std::mt19937_64 rng(5);
  for (const auto &name : {"S3", "D8", "A4", "D10", "C6"}) {
    auto g = cat(name);
    const auto &t = g->character_table();
    std::size_t n = t.rational_orbits().size();
    auto a = RationalRepModel::qirreducible(g, rng() % n);
    auto b = RationalRepModel::qirreducible(g, rng() % n);
    auto sum = RationalRepModel::direct_sum(a, b);
    CHECK(sum.character() == a.character() + b.character());
    auto ten = RationalRepModel::tensor(a, b);
    CHECK(ten.character() == a.character() * b.character());
    ten.verify();
    for (const auto &sc : g->subgroup_classes()) {
      const auto &h = g->subgroup(sc.representative);
      auto hg = g->subgroup_as_group(h);
      auto inner = RationalRepModel::qirreducible(hg, rng() % hg->character_table().rational_orbits().size());
      auto ind = RationalRepModel::induced(g, h, inner);
      ind.verify();
      CHECK(ind.character() == induce(g, h, inner.character()));
    }
    // a random rational basis change keeps the character and the invariant dimensions
    std::size_t d = sum.dimension();
    QMatrix p(d, d);
    do {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          p(i, j) = static_cast<long>(rng() % 7) - 3;
    } while (p.determinant() == 0);
    auto moved = sum.change_basis(p);
    moved.verify();
    CHECK(moved.character() == sum.character());
    for (const auto &sc : g->subgroup_classes()) {
      const auto &h = g->subgroup(sc.representative);
      CHECK(invariant_subspace(moved, h).cols() == invariant_subspace(sum, h).cols());
    }
  }
}

TEST_CASE("models for rational characters") {
  auto s4 = cat("S4");
  const auto &t = s4->character_table();
  auto chi = t.character(0) + t.character(3) + t.character(3) + t.character(4);
  auto m = RationalRepModel::for_character(chi);
  CHECK(m.character() == chi);
  CHECK(m.dimension() == 10);
}

#include "brauer/catalog.hpp"
#include "brauer/error.hpp"
#include "brauer/induction.hpp"

#include <doctest.h>
#include "oracles.hpp"

using namespace brauer;
using namespace brauer::oracle;

namespace {

GroupPtr cat(const std::string &name) { return FiniteGroup::from_catalog(name); }

} // namespace

TEST_CASE("atoms of the small groups") {
  auto s3 = cat("S3");
  const auto &t = s3->character_table();
  auto atoms = generator_atoms(s3);
  CHECK_FALSE(atoms.partial);
  bool found = false;
  for (const auto &a : atoms.atoms) {
    CHECK(a.character.degree() == 0);
    CHECK(a.character.is_real());
    CHECK(virtual_determinant(a.character) == ClassFunction::trivial(s3));
    if (a.kind == GeneratorAtom::Kind::dihedral && a.character == t.character(2) - t.character(0) - t.character(1)) {
      found = true;
      CHECK(a.quotient == "D6");
      CHECK(a.prime == 3);
    }
  }
  CHECK(found);

  auto v4 = cat("C2xC2");
  for (const auto &a : generator_atoms(v4).atoms)
    if (a.kind == GeneratorAtom::Kind::dihedral)
      CHECK(a.quotient == "C2xC2");

  for (const auto &name : {"C3", "C5", "C7", "C9"})
    for (const auto &a : generator_atoms(cat(name)).atoms)
      CHECK(a.kind == GeneratorAtom::Kind::conjugate_pair);

  auto partial = generator_atoms(cat("S4"), 2);
  CHECK(partial.partial);
  CHECK(partial.atoms.size() <= 2);
}

TEST_CASE("decomposition examples") {
  auto s3 = cat("S3");
  const auto &t = s3->character_table();
  auto one = t.character(0), eps = t.character(1), rho = t.character(2);
  auto d = decompose_permutation_character(s3, rho + eps - ClassFunction::constant(s3, 3));
  CHECK(d.residual.is_zero());
  CHECK(d.verify());
  REQUIRE(d.atoms.size() == 2);
  ClassFunction a = d.atoms[0].character * Rational(d.coefficients[0]);
  ClassFunction b = d.atoms[1].character * Rational(d.coefficients[1]);
  CHECK(((a == rho - one - eps && b == (eps - one) * Rational(2)) ||
         (b == rho - one - eps && a == (eps - one) * Rational(2))));

  CHECK(decompose_permutation_character(s3, ClassFunction(s3)).atoms.empty());

  CHECK_THROWS_AS(decompose_permutation_character(s3, rho), ValidationError);
  // degree 0 but determinant eps
  CHECK_THROWS_AS(decompose_permutation_character(s3, eps - one), ValidationError);
  // not a combination of permutation characters
  auto c3 = cat("C3");
  const auto &tc = c3->character_table();
  CHECK_THROWS_AS(decompose_permutation_character(c3, tc.character(1) - tc.character(0)), ValidationError);
}

TEST_CASE("rho_H examples") {
  auto s3 = cat("S3");
  const auto &t = s3->character_table();
  auto one = t.character(0), eps = t.character(1), rho = t.character(2);
  const auto &c2 = s3->class_representative(1), &c3 = s3->class_representative(2);
  REQUIRE(c2.order() == 2);
  REQUIRE(c3.order() == 3);
  CHECK(rho_H(s3, s3->whole()).is_zero());
  CHECK(rho_H(s3, c2) == rho - eps - one);
  CHECK(rho_H(s3, c3).is_zero());

  auto v4 = cat("C2xC2");
  auto r = rho_H(v4, v4->trivial());
  CHECK(r.degree() == 0);
  auto d = decompose_permutation_character(v4, r);
  CHECK(d.residual.is_zero());
  CHECK(rebuild(v4, d) == r);
}

TEST_CASE("every rho_H decomposes over the catalog") {
  for (const auto &name : catalog_names()) {
    auto g = cat(name);
    if (g->order() > 48)
      continue;
    CAPTURE(name);
    for (std::size_t k = 0; k < g->subgroup_classes().size(); ++k) {
      const auto &h = g->class_representative(static_cast<int>(k));
      auto target = rho_H(g, h);
      // independent recomputation of the target from fixed points
      auto ind = coset_character(g, h);
      auto det = determinant_character(ind);
      CHECK(target == ind - det - ClassFunction::constant(g, ind.degree() - 1));
      auto d = decompose_permutation_character(g, target);
      CHECK(d.residual.is_zero());
      CHECK(rebuild(g, d) == target);
      for (const auto &a : d.atoms) {
        CHECK(a.character.degree() == 0);
        CHECK(virtual_determinant(a.character) == ClassFunction::trivial(g));
      }
    }
  }
}

TEST_CASE("symmetric group identity") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    auto id = sn_brauer_identity(n);
    const auto &g = id.group;
    CHECK(id.rho.degree() == n - 1);
    // rho = n 1 - det rho + 2 sigma + sum tau, checked value by value
    ClassFunction rhs = ClassFunction::constant(g, n) - determinant_character(id.rho) + id.sigma * Rational(2);
    for (const auto &t : id.terms) {
      CHECK(t.theta.is_genuine());
      CHECK(t.prime <= n);
      CHECK(is_prime(t.prime));
      rhs += t.tau;
    }
    CHECK(rhs == id.rho);
    CHECK(id.verify());
    CHECK(id.sigma.degree() == 0);
  }
  auto s2 = sn_brauer_identity(2);
  CHECK(s2.terms.empty());
  CHECK(s2.sigma == s2.sign - ClassFunction::trivial(s2.group));

  auto s3 = sn_brauer_identity(3);
  REQUIRE(s3.terms.size() == 1);
  CHECK(s3.terms[0].prime == 3);
  auto rel = enumerate_brauer_relations(s3.group)[0];
  CHECK((s3.terms[0].theta == rel || s3.terms[0].theta == Integer(-1) * rel));
  CHECK(s3.sigma == s3.sign - ClassFunction::trivial(s3.group));

  CHECK_THROWS_AS(sn_brauer_identity(1), ValidationError);
  CHECK_THROWS_AS(sn_brauer_identity(7), ValidationError);
}

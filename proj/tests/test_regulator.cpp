#include "brauer/catalog.hpp"
#include "brauer/error.hpp"
#include "brauer/regulator.hpp"

#include <doctest.h>

#include <random>

using namespace brauer;

namespace {

GroupPtr cat(const std::string &name) { return FiniteGroup::from_catalog(name); }

// x is a square in Q_p, decided from residues mod p (odd p) or mod 8 (p = 2)
bool is_qp_square(const Rational &x, long p) {
  Integer num = x.get_num(), den = x.get_den();
  long v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  if (v % 2 != 0)
    return false;
  long m = p == 2 ? 8 : p;
  Integer u = num * den; // same class as num / den
  long r = Integer(((u % m) + m) % m).get_si();
  for (long a = 1; a < m; ++a)
    if ((a * a) % m == r && (p == 2 ? a % 2 == 1 : true))
      return true;
  return false;
}

Rational random_rational(std::mt19937_64 &rng) {
  long n = static_cast<long>(rng() % 400) - 200;
  if (n == 0)
    n = 7;
  return make_rational(n, static_cast<long>(rng() % 60) + 1);
}

QMatrix random_invertible(std::mt19937_64 &rng, std::size_t n) {
  QMatrix p(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        p(i, j) = static_cast<long>(rng() % 7) - 3;
  } while (p.determinant() == 0);
  return p;
}

} // namespace

TEST_CASE("square classes over Q and Q_p") {
  CHECK(SquareClass::over_q(12).representative() == 3);
  CHECK(SquareClass::over_q(make_rational(-1, 27)).representative() == -3);
  CHECK_THROWS_AS(SquareClass::over_q(0), ValidationError);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    Rational x = random_rational(rng), y = random_rational(rng);
    CHECK(SquareClass::over_q(x * y) == SquareClass::over_q(x) * SquareClass::over_q(y));
    CHECK((SquareClass::over_q(x) == SquareClass::over_q(y)) == is_rational_square(x / y));
    for (long p : {2L, 3L, 5L, 7L}) {
      auto a = SquareClass::over_qp(x, p), b = SquareClass::over_qp(y, p);
      CHECK((a == b) == is_qp_square(x / y, p));
      CHECK(a * b == SquareClass::over_qp(x * y, p));
      CHECK(a.ord_parity(p) == static_cast<int>(((valuation(x, Integer(p)) % 2) + 2) % 2));
    }
  }
}

TEST_CASE("regulator constants of the basic examples") {
  auto s3 = cat("S3");
  const auto &t = s3->character_table();
  auto theta = enumerate_brauer_relations(s3)[0];
  // orientation with C2, C3 on the positive side
  if (theta[1] < 0)
    theta = Integer(-1) * theta;
  auto one = regulator_constant_pairing(theta, RationalRepModel::trivial(s3));
  CHECK(one.value == 3);
  CHECK(one.square_class.representative() == 3);
  auto eps = regulator_constant_pairing(theta, RationalRepModel::linear(t.character(1)));
  CHECK(eps.square_class.representative() == 3);
  CHECK(regulator_constant_sf(theta, t.character(2)) == 3);
  CHECK(regulator_constant_sf(theta, t.character(2) + t.character(2)) == 1);
  CHECK(regulator_constant_sf(theta, ClassFunction(s3)) == 1);

  auto v4 = cat("C2xC2");
  auto psi = enumerate_brauer_relations(v4)[0];
  if (psi[1] < 0)
    psi = Integer(-1) * psi;
  auto c = regulator_constant_pairing(psi, RationalRepModel::trivial(v4));
  CHECK(c.value == 2);
  CHECK(c.square_class.representative() == 2);

  for (const auto &[g, rel] : {std::pair{s3, theta}, std::pair{v4, psi}}) {
    auto reg = RationalRepModel::regular(g);
    auto rm = find_realising_map(rel, reg);
    CHECK(regulator_constant_phi(rm).representative() == 1);
    CHECK(regulator_constant_pairing(rel, reg).square_class.representative() == 1);
  }
  auto empty = find_realising_map(BrauerRelation::zero(s3), RationalRepModel::regular(s3));
  CHECK(regulator_constant_phi(empty).representative() == 1);
  CHECK(regulator_constant_pairing(BrauerRelation::zero(s3), RationalRepModel::regular(s3)).value == 1);
}

TEST_CASE("pullback maps are adjoint for the scaled pairings") {
  for (const auto &name : {"S3", "C2xC2", "D8", "A4"}) {
    auto g = cat(name);
    auto theta = enumerate_brauer_relations(g)[0];
    auto model = RationalRepModel::regular(g);
    auto rm = find_realising_map(theta, model);
    auto pos = theta.positive_expanded(), neg = theta.negative_expanded();
    auto gram = [&](const std::vector<int> &side, const std::vector<QMatrix> &bases) {
      std::size_t n = 0;
      for (const auto &b : bases)
        n += b.cols();
      QMatrix out(n, n);
      std::size_t o = 0;
      for (std::size_t i = 0; i < side.size(); ++i) {
        auto blk = bases[i].transpose() * bases[i] *
                   make_rational(1, static_cast<long>(g->class_representative(side[i]).order()));
        out.set_block(o, o, blk);
        o += bases[i].cols();
      }
      return out;
    };
    auto g1 = gram(pos, rm.source_bases), g2 = gram(neg, rm.target_bases);
    // <phi* x, y>_1 = <x, (phi^v)* y>_2 for all x in (+)V^{H'}, y in (+)V^{H}
    CHECK(rm.phi_star.transpose() * g1 == g2 * rm.dual_star);
    CHECK(g1.determinant() / g2.determinant() ==
          regulator_constant_pairing(theta, model).value);
  }
}

TEST_CASE("tau for the dihedral-type examples") {
  auto s3 = cat("S3");
  const auto &t = s3->character_table();
  auto tau = tau_rep(enumerate_brauer_relations(s3)[0], 3);
  CHECK(tau.tau == t.character(0) + t.character(1) + t.character(2));
  CHECK(tau.method == "rational-table");
  auto v4 = cat("C2xC2");
  const auto &tv = v4->character_table();
  auto tv2 = tau_rep(enumerate_brauer_relations(v4)[0], 2);
  CHECK(tv2.tau == tv.character(0) + tv.character(1) + tv.character(2) + tv.character(3));
  for (int p : {5, 7}) {
    auto d = cat("D" + std::to_string(2 * p));
    const auto &td = d->character_table();
    auto r = tau_rep(enumerate_brauer_relations(d)[0], p);
    CHECK(r.method == "dihedral");
    CHECK(r.tau == td.character(0) + td.character(1) + td.character(2));
    CHECK(td.degree(2) == 2);
    CHECK_THROWS_AS(tau_rep(enumerate_brauer_relations(d)[0], 3), UnsupportedError);
  }
  CHECK(tau_rep(BrauerRelation::zero(s3), 3).tau.is_zero());
}

TEST_CASE("tau pairs correctly with every rational irreducible") {
  for (const auto &name : {"S3", "C2xC2", "D8", "S4", "D12"}) {
    auto g = cat(name);
    const auto &t = g->character_table();
    REQUIRE(t.is_rational());
    for (const auto &theta : enumerate_brauer_relations(g))
      for (long p : {2L, 3L}) {
        auto tau = tau_rep(theta, p);
        CHECK(tau.tau.is_real());
        CHECK(is_true_character(tau.tau));
        for (std::size_t i = 0; i < t.size(); ++i) {
          // three copies carry the square class of one copy
          auto model = RationalRepModel::for_character(t.character(i) + t.character(i) + t.character(i));
          int par = regulator_constant_pairing(theta, model).square_class.ord_parity(p);
          CHECK(static_cast<int>(Integer(inner_product_q(tau.tau, t.character(i)).get_num() % 2).get_si()) == par);
        }
      }
  }
}

TEST_CASE("regulator constant properties on random instances") {
  std::mt19937_64 rng(97);
  std::vector<std::string> names{"S3", "C2xC2", "D8", "D10", "A4", "D12", "S4", "C6", "D14"};
  for (int trial = 0; trial < 40; ++trial) {
    auto g = cat(names[rng() % names.size()]);
    auto rels = enumerate_brauer_relations(g);
    if (rels.empty())
      continue;
    const auto &t = g->character_table();
    auto pick_model = [&] {
      auto m = RationalRepModel::qirreducible(g, rng() % t.rational_orbits().size());
      if (rng() % 2)
        m = RationalRepModel::direct_sum(m, RationalRepModel::qirreducible(g, rng() % t.rational_orbits().size()));
      return m;
    };
    auto theta = rels[rng() % rels.size()];
    auto theta2 = Integer(static_cast<long>(rng() % 3) - 1) * rels[rng() % rels.size()];
    auto v1 = pick_model(), v2 = pick_model();
    CAPTURE(g->name());
    auto c1 = regulator_constant_pairing(theta, v1).square_class;
    // two routes
    CHECK(regulator_constant_phi(find_realising_map(theta, v1, {static_cast<std::uint64_t>(trial + 1)})) == c1);
    // additivity in V and in Theta
    auto c2 = regulator_constant_pairing(theta, v2).square_class;
    CHECK(regulator_constant_pairing(theta, RationalRepModel::direct_sum(v1, v2)).square_class == c1 * c2);
    CHECK(regulator_constant_pairing(theta + theta2, v1).square_class ==
          c1 * regulator_constant_pairing(theta2, v1).square_class);
    // basis independence
    std::vector<int> ids;
    for (int k : theta.positive_expanded())
      ids.push_back(g->class_representative(k).id);
    for (int k : theta.negative_expanded())
      ids.push_back(g->class_representative(k).id);
    auto bases = invariant_bases(v1, ids);
    for (auto &b : bases)
      if (b.cols())
        b = b * random_invertible(rng, b.cols());
    CHECK(regulator_constant_pairing(theta, v1, std::nullopt, &bases).square_class == c1);
    // pairing independence: average a random positive-definite seed
    auto a = random_invertible(rng, v1.dimension());
    auto seeded = invariant_pairing(v1, a.transpose() * a);
    CHECK(regulator_constant_pairing(theta, v1, seeded).square_class == c1);
    // a change of model basis does not matter either
    auto moved = v1.change_basis(random_invertible(rng, v1.dimension()));
    CHECK(regulator_constant_pairing(theta, moved).square_class == c1);
  }
}

#include "brauer/error.hpp"
#include "brauer/json_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace brauer;

namespace {

// the S3 relation with C2 and C3 on the positive side
Json s3_relation() { return Json{{"C2", 2}, {"C3", 1}, {"1", -1}, {"S3", -2}}; }

Json s3_job(const Json &places, const std::string &omega = "chi2") {
  return {{"group", "S3"}, {"relation", s3_relation()}, {"prime", 3}, {"omega", omega}, {"places", places}};
}

Json v4_job(const Json &places, const std::string &omega = "chi1+chi2+chi3") {
  return {{"group", "C2xC2"},
          {"relation", Json{{"C2a", 1}, {"C2b", 1}, {"C2c", 1}, {"1", -1}, {"C2xC2", -2}}},
          {"prime", 2},
          {"omega", omega},
          {"places", places}};
}

Json tamagawa_place(const std::string &label, long q, long c2, long c3, long one, long s3) {
  return {{"label", label},
          {"kind", "nonarchimedean"},
          {"residue_characteristic", q},
          {"tamagawa", {{"C2", c2}, {"C3", c3}, {"1", one}, {"S3", s3}}}};
}

} // namespace

TEST_CASE("Tamagawa shortcut") {
  auto job = parse_parity_job(s3_job(Json::array()));
  LocalDataRecord r;
  r.label = "5";
  r.residue_characteristic = 5;
  auto g = job.theta.group();
  for (const auto &name : {"1", "C2", "C3", "S3"})
    r.tamagawa_ord[subgroup_class_by_label(*g, name)] = 0;
  CHECK(ord_p_lambda_tamagawa(r, job.theta, 3) == 0);
  // positive side C2, C2, C3 with ords 1, 1, 0; negative side all 0
  r.tamagawa_ord[subgroup_class_by_label(*g, "C2")] = 1;
  CHECK(ord_p_lambda_tamagawa(r, job.theta, 3) == 2);
  r.tamagawa_ord[subgroup_class_by_label(*g, "S3")] = 1;
  CHECK(ord_p_lambda_tamagawa(r, job.theta, 3) == 0);
  r.tamagawa_ord.erase(subgroup_class_by_label(*g, "C3"));
  CHECK_THROWS_WITH_AS(ord_p_lambda_tamagawa(r, job.theta, 3), doctest::Contains("C3"), ValidationError);
  r.tamagawa_ord[subgroup_class_by_label(*g, "C3")] = 0;
  CHECK_THROWS_AS(ord_p_lambda_tamagawa(r, job.theta, 2), ValidationError);
  r.residue_characteristic = 3;
  CHECK_THROWS_AS(ord_p_lambda_tamagawa(r, job.theta, 3), ValidationError);
}

TEST_CASE("complex places") {
  auto s3 = FiniteGroup::from_catalog("S3");
  auto theta = parse_relation(s3, s3_relation());
  const auto &t = s3->character_table();
  CHECK(ord_p_lambda_complex(theta, t.character(2), 3) == 1);
  CHECK(ord_p_lambda_complex(theta, t.character(2) + t.character(2), 3) == 0);
  CHECK(ord_p_lambda_complex(theta, ClassFunction(s3), 3) == 0);
  // delegation to the squarefree regulator constant over the catalog
  for (const auto &name : {"S3", "C2xC2", "D8", "D10", "S4", "A4", "D12"}) {
    auto g = FiniteGroup::from_catalog(name);
    const auto &tg = g->character_table();
    for (const auto &rel : enumerate_brauer_relations(g))
      for (std::size_t o = 0; o < tg.rational_orbits().size(); ++o) {
        auto psi = tg.rational_irreducible(o);
        Integer sf = regulator_constant_sf(rel, psi);
        for (long p : {2L, 3L, 5L})
          CHECK(ord_p_lambda_complex(rel, psi, p) == (sf % p == 0 ? 1 : 0));
      }
  }
}

TEST_CASE("aggregation over synthetic job files") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    Json places = Json::array();
    long expect = 0;
    for (int k = 0, m = static_cast<int>(rng() % 6) + 1; k < m; ++k) {
      std::string label = "v" + std::to_string(k);
      switch (rng() % 3) {
      case 0: {
        long c2 = rng() % 4, c3 = rng() % 4, one = rng() % 4, s3 = rng() % 4;
        places.push_back(tamagawa_place(label, 2 + 3 * (rng() % 2), c2, c3, one, s3));
        expect += 2 * c2 + c3 - one - 2 * s3;
        break;
      }
      case 1:
        places.push_back({{"label", label}, {"kind", "complex"}});
        // omega = chi2 gives C^sf = 3
        expect += 1;
        break;
      default: {
        long v = static_cast<long>(rng() % 7) - 3;
        places.push_back({{"label", label}, {"kind", rng() % 2 ? "real" : "nonarchimedean"},
                          {"residue_characteristic", 0}, {"override", v}});
        if (places.back()["kind"] == "nonarchimedean")
          places.back()["residue_characteristic"] = 3;
        expect += v;
      }
      }
    }
    auto rep = aggregate_parity(parse_parity_job(s3_job(places)));
    CHECK(rep.total == expect);
    CHECK(rep.parity == ((expect % 2) + 2) % 2);
    long sum = 0;
    for (const auto &c : rep.contributions)
      sum += c.value;
    CHECK(sum == rep.total);
    CHECK(rep.warnings.empty());
    // order independence
    std::shuffle(places.begin(), places.end(), rng);
    CHECK(aggregate_parity(parse_parity_job(s3_job(places))).parity == rep.parity);
  }

  Json mixed = Json::array({tamagawa_place("2", 2, 1, 0, 0, 0), Json{{"label", "inf"}, {"kind", "complex"}},
                            Json{{"label", "3"}, {"kind", "nonarchimedean"}, {"residue_characteristic", 3},
                                 {"override", 1}}});
  auto rep = aggregate_parity(parse_parity_job(s3_job(mixed)));
  REQUIRE(rep.contributions.size() == 3);
  CHECK(rep.contributions[0].provenance == "tamagawa");
  CHECK(rep.contributions[1].provenance == "complex");
  CHECK(rep.contributions[2].provenance == "user");
  CHECK(rep.total == 4);
  CHECK(rep.parity == 0);
  REQUIRE(rep.tau);
  CHECK(rep.statement.find("even") != std::string::npos);

  CHECK(aggregate_parity(parse_parity_job(s3_job(Json::array()))).parity == 0);
}

TEST_CASE("overrides next to component data") {
  auto place = tamagawa_place("7", 7, 1, 0, 0, 0);
  place["override"] = 2;
  auto same = aggregate_parity(parse_parity_job(s3_job(Json::array({place}))));
  auto plain = aggregate_parity(parse_parity_job(s3_job(Json::array({tamagawa_place("7", 7, 1, 0, 0, 0)}))));
  CHECK(same.total == plain.total);
  CHECK(same.warnings.empty());
  place["override"] = 1;
  auto clash = aggregate_parity(parse_parity_job(s3_job(Json::array({place}))));
  CHECK(clash.total == 1);
  REQUIRE(clash.warnings.size() == 1);
  CHECK(clash.warnings[0].find("parity differs") != std::string::npos);
}

TEST_CASE("unresolvable places and p = 2") {
  Json real = {{"label", "R"}, {"kind", "real"}};
  CHECK_THROWS_WITH_AS(aggregate_parity(parse_parity_job(s3_job(Json::array({real})))), doctest::Contains("R"),
                       ValidationError);
  Json above = tamagawa_place("3", 3, 0, 0, 0, 0);
  CHECK_THROWS_AS(aggregate_parity(parse_parity_job(s3_job(Json::array({above})))), ValidationError);
  above["c_ratio"] = 1;
  auto rep = aggregate_parity(parse_parity_job(s3_job(Json::array({above}))));
  CHECK(rep.contributions[0].provenance == "full-lambda");
  CHECK(rep.total == 1);

  // p = 2: the shortcut is off, deficiency flags and the period term are required
  Json v = {{"label", "5"},
            {"kind", "nonarchimedean"},
            {"residue_characteristic", 5},
            {"tamagawa", {{"C2a", 1}, {"C2b", 0}, {"C2c", 0}, {"1", 0}, {"C2xC2", 0}}}};
  CHECK_THROWS_WITH_AS(aggregate_parity(parse_parity_job(v4_job(Json::array({v})))),
                       doctest::Contains("deficiency"), ValidationError);
  v["deficiency"] = {{"C2a", 2}, {"C2b", 1}, {"C2c", 2}, {"1", 1}, {"C2xC2", 2}};
  v["c_ratio"] = 0;
  auto r2 = aggregate_parity(parse_parity_job(v4_job(Json::array({v}))));
  // Tamagawa 1; deficiency C2a + C2c - 2 C2xC2 = 0
  CHECK(r2.total == 1);
  CHECK(r2.contributions[0].provenance == "full-lambda");

  auto bad = s3_job(Json::array());
  bad["omega"] = "chi2-chi1";
  CHECK_THROWS_AS(parse_parity_job(bad), ValidationError);
  Json c3 = {{"group", "C3"}, {"relation", Json::array({0, 0})}, {"prime", 3}, {"omega", "chi1"}};
  CHECK_THROWS_AS(parse_parity_job(c3), Error);
}

TEST_CASE("elliptic recipe") {
  Json theta_places = Json::array({tamagawa_place("2", 2, 1, 0, 0, 0)});
  Json psi_places = Json::array({Json{{"label", "2"}, {"kind", "nonarchimedean"}, {"residue_characteristic", 2},
                                      {"override", 0}}});
  Json in = {{"theta", s3_job(theta_places, "0")}, {"psi", v4_job(psi_places, "0")}, {"cubic", {5, 0, 0, 1}}};
  auto rep = elliptic_recipe(parse_recipe(in));
  REQUIRE(rep.parts.size() == 2);
  CHECK(rep.parts[0].total == 2);
  CHECK(rep.total == rep.parts[0].total + rep.parts[1].total);
  CHECK(rep.statement == "rk E is even");
  CHECK(std::any_of(rep.warnings.begin(), rep.warnings.end(),
                    [](const std::string &w) { return w.find("constant extension") != std::string::npos; }));

  in["theta"]["places"] = Json::array({tamagawa_place("2", 2, 0, 1, 0, 0)});
  auto odd = elliptic_recipe(parse_recipe(in));
  CHECK(odd.parts[0].total == 1);
  CHECK(odd.parts[1].total == 0);
  CHECK(odd.statement == "rk E is odd");

  // roles may not be swapped
  Json swapped = {{"theta", v4_job(psi_places, "0")}, {"psi", s3_job(theta_places, "0")}};
  CHECK_THROWS_AS(elliptic_recipe(parse_recipe(swapped)), ValidationError);
}

TEST_CASE("w' assembly") {
  auto one = [](long a, long b, long c, long d) {
    return assemble_w_prime({WPrimePlace{"v", a, b, c, d}}).global_sign;
  };
  CHECK(one(0, 0, 0, 0) == 1);
  CHECK(one(1, 0, 0, 0) == -1);
  CHECK(one(1, 1, 1, 1) == 1);
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<WPrimePlace> places;
    long sum = 0;
    for (int k = 0, m = static_cast<int>(rng() % 5) + 1; k < m; ++k) {
      long e[4];
      for (auto &x : e) {
        x = static_cast<long>(rng() % 9) - 4;
        sum += x;
      }
      places.push_back({"v" + std::to_string(k), e[0], e[1], e[2], e[3]});
    }
    auto rep = assemble_w_prime(places);
    CHECK(rep.exponent_total == sum);
    CHECK(rep.global_sign == (sum % 2 == 0 ? 1 : -1));
  }
  auto parsed = parse_wprime(Json::parse(R"({"places":[{"label":"2","alpha_y":1,"beta_y":0,"alpha_delta":0}]})"));
  CHECK_THROWS_WITH_AS(assemble_w_prime(parsed), doctest::Contains("gamma"), ValidationError);
}

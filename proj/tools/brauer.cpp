#include "brauer/catalog.hpp"
#include "brauer/error.hpp"
#include "brauer/json_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace brauer;

namespace {

std::string format = "json";

void emit(const Json &j, const std::string &text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// relation given as a basis index, inline JSON, or a JSON file
BrauerRelation relation_arg(const GroupPtr &g, const std::string &arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '['))
    return parse_relation(g, Json::parse(arg));
  if (std::filesystem::exists(arg)) {
    auto j = read_json_file(arg);
    return parse_relation(g, j.is_object() && j.contains("relation") ? j["relation"] : j);
  }
  try {
    return parse_relation(g, Json(std::stol(arg)));
  } catch (const std::invalid_argument &) {
    throw ValidationError("relation must be an index, inline JSON or a file: '" + arg + "'");
  }
}

std::string lines(const std::vector<std::string> &v) {
  std::string s;
  for (const auto &x : v)
    s += x + "\n";
  return s;
}

std::string report_text(const ParityReport &r, const std::string &indent = "") {
  std::string s;
  for (const auto &c : r.contributions)
    s += indent + c.label + ": " + std::to_string(c.value) + " [" + c.provenance + "]\n";
  s += indent + "total " + std::to_string(r.total) + " (mod 2: " + std::to_string(r.parity) + ")\n";
  for (const auto &p : r.parts)
    s += report_text(p, indent + "  ");
  for (const auto &w : r.warnings)
    s += indent + "warning: " + w + "\n";
  s += indent + r.statement + "\n";
  return s;
}

int run(int argc, char **argv) {
  CLI::App app{"Brauer relations, regulator constants and parity bookkeeping"};
  app.require_subcommand(1);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string group, relation = "0", rep = "1", target, poly, gamma, fixed, file;
  long prime = 0;
  int n = 0, degree = 0;
  std::uint64_t seed = 1;
  bool curve = false, tower = false;

  auto *chartable = app.add_subcommand("chartable", "Character table of a group");
  chartable->add_option("group", group)->required();

  auto *relations = app.add_subcommand("relations", "Basis of the Brauer relations of a group");
  relations->add_option("group", group)->required();

  auto *regconst = app.add_subcommand("regconst", "Regulator constant by the pairing and realising-map routes");
  regconst->add_option("group", group)->required();
  regconst->add_option("--relation", relation, "Basis index, inline JSON or file");
  regconst->add_option("--rep", rep, "Representation: character terms, reg or perm(H)");
  regconst->add_option("--seed", seed, "Seed of the realising-map search");

  auto *tau = app.add_subcommand("tau", "Representation tau for a relation and a prime");
  tau->add_option("group", group)->required();
  tau->add_option("--relation", relation, "Basis index, inline JSON or file");
  tau->add_option("-p,--prime", prime)->required();

  auto *decompose_cmd = app.add_subcommand("decompose", "Decompose a permutation character over the generator atoms");
  decompose_cmd->add_option("group", group)->required();
  decompose_cmd->add_option("--target", target, "Character terms, e.g. chi2+chi1-3 or rho(C2)")->required();

  auto *sn = app.add_subcommand("sn-identity", "Symmetric-group identity with Brauer relations");
  sn->add_option("n", n)->required()->check(CLI::Range(2, 6));

  auto *closure = app.add_subcommand("closure", "S_n-closure of a Galois set");
  closure->add_option("--degree", degree)->required();
  closure->add_option("--group", gamma, "Catalog name or deg:(cycles),...")->required();
  closure->add_option("--fixed", fixed, "Fixed algebra for point, alt or sym");

  auto *disc = app.add_subcommand("disc", "Polynomial discriminant and discriminant-curve data");
  disc->add_option("--poly", poly, "Coefficients, lowest degree first")->required();
  disc->add_flag("--curve", curve, "Also disc_x(f(x) - t) and its squarefree split");
  disc->add_flag("--tower", tower, "Discriminant data for the cover x^2 = f(z)");

  auto *parity = app.add_subcommand("parity", "Aggregate local data of a parity job");
  parity->add_option("job", file)->required()->check(CLI::ExistingFile);
  auto *recipe = app.add_subcommand("recipe", "Rank parity from the S3 and C2xC2 jobs");
  recipe->add_option("jobs", file)->required()->check(CLI::ExistingFile);
  auto *wprime = app.add_subcommand("wprime", "Assemble the local signs w'");
  wprime->add_option("components", file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  if (chartable->parsed()) {
    auto g = FiniteGroup::parse(group);
    const auto &t = g->character_table();
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i)
      s += "chi" + std::to_string(i) + ": " + t.character(i).to_string() + "\n";
    emit(to_json(t, *g), s);
  } else if (relations->parsed()) {
    auto g = FiniteGroup::parse(group);
    Json out = Json::array();
    std::vector<std::string> text;
    auto rels = enumerate_brauer_relations(g);
    for (const auto &r : rels) {
      out.push_back(to_json(r));
      text.push_back(r.to_string());
    }
    emit({{"group", g->name()}, {"rank", rels.size()}, {"relations", out}}, lines(text));
  } else if (regconst->parsed()) {
    auto g = FiniteGroup::parse(group);
    auto theta = relation_arg(g, relation);
    auto model = parse_model_spec(g, rep);
    auto pairing = regulator_constant_pairing(theta, model);
    auto rm = find_realising_map(theta, model, {seed});
    auto phi = regulator_constant_phi(rm);
    if (!(phi == pairing.square_class))
      throw InternalError("the two regulator constant routes disagree");
    emit({{"relation", to_json(theta)},
          {"representation", to_json(model.character())},
          {"pairing_value", to_string(pairing.value)},
          {"pairing_class", to_json(pairing.square_class)},
          {"phi_class", to_json(phi)},
          {"phi_determinant", to_string((rm.phi_star * rm.dual_star).determinant())},
          {"search_tries", rm.tries}},
         "C_Theta = " + to_string(pairing.value) + " = " + pairing.square_class.representative().get_str() +
             " mod squares (both routes)\n");
  } else if (tau->parsed()) {
    auto g = FiniteGroup::parse(group);
    auto t = tau_rep(relation_arg(g, relation), prime);
    emit(to_json(t), "tau = " + t.tau.to_string() + " [" + t.method + "]\n");
  } else if (decompose_cmd->parsed()) {
    auto g = FiniteGroup::parse(group);
    auto d = decompose_permutation_character(g, parse_character_spec(g, target));
    std::string s;
    for (std::size_t i = 0; i < d.atoms.size(); ++i)
      s += d.coefficients[i].get_str() + " x " + d.atoms[i].describe() + "\n";
    s += std::string("residual ") + (d.residual.is_zero() ? "0" : d.residual.to_string()) + "\n";
    emit(to_json(d), s);
  } else if (sn->parsed()) {
    auto id = sn_brauer_identity(n);
    std::string s = "sigma = " + id.sigma.to_string() + "\n";
    for (const auto &t : id.terms)
      s += "p=" + std::to_string(t.prime) + ": " + t.theta.to_string() + "\n";
    s += std::string("verified ") + (id.verify() ? "yes" : "no") + "\n";
    emit(to_json(id), s);
  } else if (closure->parsed()) {
    auto g = FiniteGroup::parse(gamma);
    if (g->degree() != degree)
      throw ValidationError("group acts on " + std::to_string(g->degree()) + " points, not " + std::to_string(degree));
    auto c = sn_closure(EtaleAlgebraModel::natural(g));
    Json out{{"degree", degree}, {"bijections", c.size()}, {"component_degrees", c.component_degrees()}};
    std::string s = "|Bij| = " + std::to_string(c.size()) + ", components " + std::to_string(c.components().size()) + "\n";
    if (!fixed.empty()) {
      std::vector<Perm> u = fixed == "point" ? point_stabilizer_generators(degree)
                            : fixed == "alt" ? alternating_generators(degree)
                            : fixed == "sym" ? symmetric_generators(degree)
                                             : throw ValidationError("--fixed takes point, alt or sym");
      auto f = fixed_algebra(c, u);
      out["fixed_algebra"] = {{"subgroup", fixed}, {"degree", f.degree()}, {"orbit_sizes", f.orbit_sizes()}};
      s += "fixed algebra degree " + std::to_string(f.degree()) + ", orbits";
      for (auto o : f.orbit_sizes())
        s += " " + std::to_string(o);
      s += "\n";
    }
    emit(out, s);
  } else if (disc->parsed()) {
    auto f = parse_poly_text(poly);
    Json out{{"poly", to_json(f)}};
    std::string s;
    if (tower) {
      auto t = delta_tower(f);
      out["discriminant"] = to_json(t.discriminant);
      out["split"] = to_json(t.split);
      out["G"] = to_json(t.big_g);
      out["constant_extension"] = t.constant_extension;
      out["a_split"] = t.a_split;
      s += "G = " + t.big_g.to_string("u") + ", a = " + t.split.a.get_str() + "\n";
    } else {
      auto d = poly_discriminant(f);
      out["discriminant"] = to_string(d);
      s += "disc = " + to_string(d) + "\n";
    }
    if (curve) {
      auto g = discriminant_curve_polynomial(f);
      auto split = squarefree_split(g);
      out["curve"] = to_json(g);
      out["curve_split"] = to_json(split);
      s += "disc_x(f - t) = " + g.to_string("t") + "; a = " + split.a.get_str() + ", g = " + split.g.to_string("t") +
           "\n";
    }
    emit(out, s);
  } else if (parity->parsed()) {
    auto r = aggregate_parity(parse_parity_job(read_json_file(file)));
    emit(to_json(r), report_text(r));
  } else if (recipe->parsed()) {
    auto r = elliptic_recipe(parse_recipe(read_json_file(file)));
    emit(to_json(r), report_text(r));
  } else if (wprime->parsed()) {
    auto r = assemble_w_prime(parse_wprime(read_json_file(file)));
    std::string s;
    for (const auto &[label, sign] : r.signs)
      s += label + ": " + (sign > 0 ? "+1" : "-1") + "\n";
    s += std::string("global ") + (r.global_sign > 0 ? "+1" : "-1") + "\n";
    emit(to_json(r), s);
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError &e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const ResourceError &e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 4;
  } catch (const SearchExhaustedError &e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return 5;
  } catch (const InternalError &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const Json::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include "brauer/json_io.hpp"

#include "brauer/error.hpp"

#include <cctype>
#include <fstream>

namespace brauer {

int subgroup_class_by_label(const FiniteGroup &g, const std::string &label) {
  auto labels = subgroup_labels(g);
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label)
      return static_cast<int>(k);
  std::string known;
  for (const auto &l : labels)
    known += (known.empty() ? "" : ", ") + l;
  throw ValidationError("no subgroup class labelled '" + label + "' (known: " + known + ")");
}

namespace {

std::string trim(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

// "perm(H)" -> H
std::optional<std::string> call_argument(const std::string &atom, const std::string &name) {
  if (atom.rfind(name + "(", 0) == 0 && atom.back() == ')')
    return atom.substr(name.size() + 1, atom.size() - name.size() - 2);
  return std::nullopt;
}

std::optional<std::string> perm_argument(const std::string &atom) { return call_argument(atom, "perm"); }

ClassFunction atom_character(const GroupPtr &g, const std::string &atom) {
  const auto &t = g->character_table();
  if (atom.empty() || atom == "1")
    return ClassFunction::trivial(g);
  if (atom == "reg")
    return permutation_character(coset_action(g, g->trivial()));
  if (auto h = perm_argument(atom))
    return permutation_character(coset_action(g, g->class_representative(subgroup_class_by_label(*g, *h))));
  if (auto h = call_argument(atom, "rho"))
    return rho_H(g, g->class_representative(subgroup_class_by_label(*g, *h)));
  if (atom.rfind("chi", 0) == 0) {
    std::size_t i = std::stoul(atom.substr(3));
    if (i >= t.size())
      throw ValidationError("no irreducible " + atom + "; the table has " + std::to_string(t.size()));
    return t.character(i);
  }
  throw ValidationError("cannot read character term '" + atom + "'");
}

Rational json_rational(const Json &j) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  throw ValidationError("expected an integer or a rational string, got " + j.dump());
}

long json_long(const Json &j, const std::string &what) {
  if (!j.is_number_integer())
    throw ValidationError(what + " must be an integer");
  return j.get<long>();
}

} // namespace

ClassFunction parse_character_spec(const GroupPtr &g, const std::string &spec) {
  ClassFunction out(g);
  std::string s = trim(spec);
  if (s.empty() || s == "0")
    return out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-' || s[i] == ' ')) {
      if (s[i] == '-')
        sign = -sign;
      ++i;
    }
    std::size_t j = i;
    int depth = 0;
    while (j < s.size() && (depth > 0 || (s[j] != '+' && s[j] != '-'))) {
      depth += s[j] == '(' ? 1 : s[j] == ')' ? -1 : 0;
      ++j;
    }
    std::string term = trim(s.substr(i, j - i));
    if (term.empty())
      throw ValidationError("empty term in character '" + spec + "'");
    std::size_t k = 0;
    while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k])))
      ++k;
    long coeff = 1;
    std::string atom = term;
    // a leading integer is a coefficient unless the whole term is the trivial character "1"
    if (k > 0 && !(k == term.size() && term == "1")) {
      coeff = std::stol(term.substr(0, k));
      atom = trim(term.substr(k));
      if (!atom.empty() && atom[0] == '*')
        atom = trim(atom.substr(1));
    }
    out += atom_character(g, atom) * Rational(sign * coeff);
    i = j;
  }
  return out;
}

RationalRepModel parse_model_spec(const GroupPtr &g, const std::string &spec) {
  std::string s = trim(spec);
  if (s == "reg")
    return RationalRepModel::regular(g);
  if (auto h = perm_argument(s); h && s.find('+') == std::string::npos)
    return RationalRepModel::permutation(coset_action(g, g->class_representative(subgroup_class_by_label(*g, *h))));
  return RationalRepModel::for_character(parse_character_spec(g, s));
}

BrauerRelation parse_relation(const GroupPtr &g, const Json &j) {
  std::size_t n = g->subgroup_classes().size();
  if (j.is_number_integer()) {
    auto rels = enumerate_brauer_relations(g);
    long i = j.get<long>();
    if (i < 0 || static_cast<std::size_t>(i) >= rels.size())
      throw ValidationError("relation index " + std::to_string(i) + " out of range; " + g->name() + " has " +
                            std::to_string(rels.size()) + " basis relations");
    return rels[i];
  }
  std::vector<Integer> c(n);
  if (j.is_object()) {
    for (const auto &[label, m] : j.items())
      c[subgroup_class_by_label(*g, label)] += json_long(m, "relation coefficient");
  } else if (j.is_array() && (j.empty() || j[0].is_number_integer())) {
    if (j.size() != n)
      throw ValidationError("coefficient array needs one entry per subgroup class (" + std::to_string(n) + ")");
    for (std::size_t k = 0; k < n; ++k)
      c[k] = json_long(j[k], "relation coefficient");
  } else if (j.is_array()) {
    for (const auto &term : j) {
      std::vector<Perm> gens;
      for (const auto &s : term.at("generators"))
        gens.push_back(parse_cycles(s.get<std::string>(), g->degree()));
      const auto &h = gens.empty() ? g->trivial() : g->generate_perms(gens);
      c[h.class_index] += json_long(term.at("multiplicity"), "multiplicity");
    }
  } else {
    throw ValidationError("cannot read relation " + j.dump());
  }
  return BrauerRelation(g, c);
}

ClassFunction parse_character(const GroupPtr &g, const Json &j) {
  const auto &t = g->character_table();
  ClassFunction out(g);
  if (j.is_string())
    return parse_character_spec(g, j.get<std::string>());
  if (j.is_array()) {
    if (j.size() != t.size())
      throw ValidationError("multiplicity vector needs one entry per irreducible (" + std::to_string(t.size()) + ")");
    for (std::size_t i = 0; i < t.size(); ++i)
      out += t.character(i) * Rational(json_long(j[i], "multiplicity"));
    return out;
  }
  if (j.is_object()) {
    for (const auto &[name, m] : j.items())
      out += atom_character(g, name) * Rational(json_long(m, "multiplicity"));
    return out;
  }
  throw ValidationError("cannot read character " + j.dump());
}

RatPoly parse_poly(const Json &j) {
  if (j.is_string())
    return parse_poly_text(j.get<std::string>());
  if (!j.is_array())
    throw ValidationError("polynomial must be a coefficient list");
  std::vector<Rational> c;
  for (const auto &x : j)
    c.push_back(json_rational(x));
  return RatPoly(c);
}

RatPoly parse_poly_text(const std::string &text) {
  std::vector<Rational> c;
  std::string s = text;
  if (!s.empty() && s.front() == '[' && s.back() == ']')
    s = s.substr(1, s.size() - 2);
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos)
      j = s.size();
    std::string tok = trim(s.substr(i, j - i));
    if (!tok.empty() && tok.front() == '"' && tok.back() == '"')
      tok = tok.substr(1, tok.size() - 2);
    if (tok.empty())
      throw ValidationError("empty coefficient in '" + text + "'");
    c.push_back(parse_rational(tok));
    i = j + 1;
  }
  return RatPoly(c);
}

namespace {

std::map<int, long> class_map(const FiniteGroup &g, const Json &j, const std::string &what) {
  std::map<int, long> out;
  if (!j.is_object())
    throw ValidationError(what + " must map subgroup labels to integers");
  for (const auto &[label, v] : j.items())
    out[subgroup_class_by_label(g, label)] = json_long(v, what);
  return out;
}

LocalDataRecord parse_record(const FiniteGroup &g, const Json &j) {
  LocalDataRecord r;
  r.label = j.value("label", std::string("?"));
  r.kind = parse_place_kind(j.value("kind", std::string("nonarchimedean")));
  if (j.contains("residue_characteristic"))
    r.residue_characteristic = json_long(j["residue_characteristic"], "residue_characteristic");
  if (j.contains("tamagawa"))
    r.tamagawa_ord = class_map(g, j["tamagawa"], "tamagawa");
  if (j.contains("deficiency"))
    for (const auto &[k, v] : class_map(g, j["deficiency"], "deficiency"))
      r.deficiency[k] = static_cast<int>(v);
  if (j.contains("override"))
    r.override_ord = json_long(j["override"], "override");
  if (j.contains("c_ratio"))
    r.c_ratio_ord = json_long(j["c_ratio"], "c_ratio");
  r.validate();
  return r;
}

} // namespace

ParityJob parse_parity_job(const Json &j) {
  auto g = FiniteGroup::parse(j.at("group").get<std::string>());
  ParityJob job;
  job.theta = parse_relation(g, j.contains("relation") ? j["relation"] : Json(0));
  job.prime = json_long(j.at("prime"), "prime");
  job.omega = j.contains("omega") ? parse_character(g, j["omega"]) : ClassFunction(g);
  if (j.contains("places"))
    for (const auto &p : j["places"])
      job.places.push_back(parse_record(*g, p));
  if (j.contains("metadata"))
    for (const auto &[k, v] : j["metadata"].items())
      job.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  job.validate();
  return job;
}

RecipeInput parse_recipe(const Json &j) {
  RecipeInput in;
  in.theta_job = parse_parity_job(j.at("theta"));
  in.psi_job = parse_parity_job(j.at("psi"));
  if (j.contains("cubic"))
    in.cubic = parse_poly(j["cubic"]);
  return in;
}

std::vector<WPrimePlace> parse_wprime(const Json &j) {
  std::vector<WPrimePlace> out;
  const Json &places = j.is_array() ? j : j.at("places");
  for (const auto &p : places) {
    WPrimePlace w;
    w.label = p.value("label", std::string("?"));
    auto get = [&](const char *key) -> std::optional<long> {
      if (!p.contains(key))
        return std::nullopt;
      return json_long(p[key], key);
    };
    w.alpha_y = get("alpha_y");
    w.beta_y = get("beta_y");
    w.alpha_delta = get("alpha_delta");
    w.gamma_delta = get("gamma_delta");
    out.push_back(w);
  }
  return out;
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Json to_json(const Cyclotomic &c) {
  Json coeffs = Json::array();
  for (const auto &x : c.coefficients())
    coeffs.push_back(to_string(x));
  return {{"order", c.order()}, {"coefficients", coeffs}, {"text", c.to_string()}};
}

Json to_json(const ClassFunction &chi) {
  Json values = Json::array();
  for (const auto &v : chi.values())
    values.push_back(chi.is_rational() ? Json(to_string(v.to_rational())) : to_json(v));
  Json out{{"values", values}};
  try {
    Json mult = Json::array();
    for (const auto &m : decompose(chi))
      mult.push_back(m.get_str());
    out["multiplicities"] = mult;
  } catch (const Error &) {
  }
  return out;
}

Json to_json(const CharacterTable &t, const FiniteGroup &g) {
  Json classes = Json::array();
  for (const auto &c : g.classes()) {
    Json ct = Json::array();
    for (int l : cycle_type(g.element(c.representative)))
      ct.push_back(l);
    classes.push_back({{"size", c.size()}, {"order", c.element_order}, {"cycle_type", ct},
                       {"representative", format_cycles(g.element(c.representative))}});
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json row = Json::array();
    for (const auto &v : t.row(i))
      row.push_back(to_json(v));
    rows.push_back({{"name", "chi" + std::to_string(i)},
                    {"degree", to_string(t.degree(i))},
                    {"indicator", static_cast<int>(t.indicator(i))},
                    {"values", row}});
  }
  return {{"group", g.name()}, {"order", g.order()}, {"classes", classes}, {"characters", rows},
          {"rational", t.is_rational()}};
}

Json to_json(const BrauerRelation &theta) {
  const auto &g = *theta.group();
  auto labels = subgroup_labels(g);
  Json terms = Json::array();
  for (std::size_t k = 0; k < theta.coefficients().size(); ++k) {
    if (theta[k] == 0)
      continue;
    const auto &h = g.class_representative(static_cast<int>(k));
    Json gens = Json::array();
    for (int s : h.generators)
      gens.push_back(format_cycles(g.element(s)));
    terms.push_back({{"subgroup", labels[k]}, {"order", h.order()}, {"generators", gens},
                     {"multiplicity", theta[k].get_str()}});
  }
  return {{"group", g.name()}, {"terms", terms}, {"text", theta.to_string()}};
}

Json to_json(const RatPoly &p) {
  Json c = Json::array();
  for (const auto &x : p.coefficients())
    c.push_back(to_string(x));
  return {{"coefficients", c}, {"text", p.to_string("t")}};
}

Json to_json(const SquareClass &c) {
  if (c.prime() == 0)
    return {{"field", "Q"}, {"representative", c.representative().get_str()}};
  return {{"field", "Q_" + std::to_string(c.prime())},
          {"valuation_parity", c.valuation_parity()},
          {"unit", c.unit_code()}};
}

Json to_json(const TauRep &t) {
  return {{"relation", to_json(t.relation)}, {"prime", t.prime}, {"tau", to_json(t.tau)},
          {"parities", t.parities}, {"method", t.method}};
}

Json to_json(const GeneratorAtom &a, const FiniteGroup &g) {
  Json out{{"character", to_json(a.character)}};
  if (a.kind == GeneratorAtom::Kind::conjugate_pair) {
    out["kind"] = "conjugate-pair";
    out["irreducible"] = "chi" + std::to_string(a.irreducible);
  } else {
    out["kind"] = "dihedral-induced";
    out["subgroup"] = subgroup_label(g, a.subgroup_class);
    out["quotient"] = a.quotient;
    out["prime"] = a.prime;
    out["kernel_order"] = a.kernel.size();
    out["tau"] = to_json(a.tau);
  }
  return out;
}

Json to_json(const Decomposition &d) {
  Json atoms = Json::array();
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    auto a = to_json(d.atoms[i], *d.target.group());
    a["coefficient"] = d.coefficients[i].get_str();
    atoms.push_back(a);
  }
  return {{"target", to_json(d.target)}, {"atoms", atoms}, {"residual_zero", d.residual.is_zero()},
          {"verified", d.verify()}};
}

Json to_json(const SnIdentity &s) {
  Json terms = Json::array();
  for (const auto &t : s.terms)
    terms.push_back({{"relation", to_json(t.theta)}, {"prime", t.prime}, {"tau", to_json(t.tau)},
                     {"multiplier", t.multiplier.get_str()}, {"atom", to_json(t.atom, *s.group)}});
  return {{"n", s.n}, {"rho", to_json(s.rho)}, {"sign", to_json(s.sign)}, {"sigma", to_json(s.sigma)},
          {"terms", terms}, {"verified", s.verify()}};
}

Json to_json(const DiscriminantData &d) {
  return {{"input", to_json(d.input)}, {"a", d.a.get_str()}, {"g", to_json(d.g)}, {"h", to_json(d.h)},
          {"verified", d.verify()}};
}

Json to_json(const ParityReport &r) {
  Json contributions = Json::array();
  for (const auto &c : r.contributions)
    contributions.push_back(
        {{"place", c.label}, {"value", c.value}, {"provenance", c.provenance}, {"formula", c.formula}});
  Json out{{"contributions", contributions}, {"total", r.total},      {"parity", r.parity},
           {"statement", r.statement},       {"warnings", r.warnings}};
  if (r.tau)
    out["tau"] = to_json(*r.tau);
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto &p : r.parts)
      parts.push_back(to_json(p));
    out["parts"] = parts;
  }
  return out;
}

Json to_json(const WPrimeReport &r) {
  Json signs = Json::array();
  for (const auto &[label, s] : r.signs)
    signs.push_back({{"place", label}, {"sign", s}});
  return {{"places", signs}, {"exponent_total", r.exponent_total}, {"global_sign", r.global_sign}};
}

} // namespace brauer

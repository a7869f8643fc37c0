#include "brauer/parity.hpp"

#include "brauer/error.hpp"

namespace brauer {

std::string to_string(PlaceKind kind) {
  switch (kind) {
  case PlaceKind::nonarchimedean:
    return "nonarchimedean";
  case PlaceKind::real:
    return "real";
  case PlaceKind::complex:
    return "complex";
  }
  return {};
}

PlaceKind parse_place_kind(const std::string &text) {
  if (text == "nonarchimedean" || text == "finite")
    return PlaceKind::nonarchimedean;
  if (text == "real")
    return PlaceKind::real;
  if (text == "complex")
    return PlaceKind::complex;
  throw ValidationError("unknown place kind '" + text + "'");
}

void LocalDataRecord::validate() const {
  if (kind == PlaceKind::nonarchimedean && !is_prime(residue_characteristic))
    throw ValidationError("place " + label + ": residue characteristic must be a prime");
  if (kind != PlaceKind::nonarchimedean && residue_characteristic != 0)
    throw ValidationError("place " + label + ": archimedean places have no residue characteristic");
  for (const auto &[k, mu] : deficiency)
    if (mu != 1 && mu != 2)
      throw ValidationError("place " + label + ": deficiency flags must be 1 or 2");
}

namespace {

int mod2(long v) { return static_cast<int>(((v % 2) + 2) % 2); }

std::string class_name(const BrauerRelation &theta, int k) { return subgroup_label(*theta.group(), k); }

// classes of the relation lacking an entry in the map
template <class Map> std::vector<int> missing(const Map &m, const BrauerRelation &theta) {
  std::vector<int> out;
  for (std::size_t k = 0; k < theta.coefficients().size(); ++k)
    if (theta[k] != 0 && !m.count(static_cast<int>(k)))
      out.push_back(static_cast<int>(k));
  return out;
}

std::string list_classes(const BrauerRelation &theta, const std::vector<int> &ks) {
  std::string s;
  for (int k : ks)
    s += (s.empty() ? "" : ", ") + class_name(theta, k);
  return s;
}

template <class Map, class F> long signed_sum(const Map &m, const BrauerRelation &theta, F value) {
  long total = 0;
  for (std::size_t k = 0; k < theta.coefficients().size(); ++k)
    if (theta[k] != 0)
      total += Integer(theta[k]).get_si() * value(m.at(static_cast<int>(k)));
  return total;
}

} // namespace

long ord_p_lambda_tamagawa(const LocalDataRecord &record, const BrauerRelation &theta, long p) {
  record.validate();
  if (p == 2 || !is_prime(p))
    throw ValidationError("the Tamagawa shortcut needs an odd prime");
  if (record.kind != PlaceKind::nonarchimedean)
    throw ValidationError("place " + record.label + ": the Tamagawa shortcut needs a nonarchimedean place");
  if (record.residue_characteristic == p)
    throw ValidationError("place " + record.label + ": the Tamagawa shortcut needs v not above p");
  auto gaps = missing(record.tamagawa_ord, theta);
  if (!gaps.empty())
    throw ValidationError("place " + record.label + ": missing Tamagawa ords for " + list_classes(theta, gaps));
  // deficiency flags are 1 or 2, so their ord_p vanishes for odd p
  return signed_sum(record.tamagawa_ord, theta, [](long v) { return v; });
}

long ord_p_lambda_complex(const BrauerRelation &theta, const ClassFunction &omega, long p) {
  if (!is_prime(p))
    throw ValidationError("ord_p needs a prime");
  Integer sf = regulator_constant_sf(theta, omega);
  return valuation(sf, Integer(p));
}

void ParityJob::validate() const {
  if (!theta.group())
    throw ValidationError("job has no relation");
  if (!is_prime(prime))
    throw ValidationError("job prime must be a prime");
  if (omega.group() != theta.group())
    throw ValidationError("differentials character lives on a different group");
  if (!omega.is_real())
    throw ValidationError("differentials character must be self-dual");
  if (!omega.is_rational())
    throw UnsupportedError("differentials character must be rational-valued");
  if (!is_true_character(omega))
    throw ValidationError("differentials character must be a true character");
  if (!theta.is_genuine())
    throw ValidationError("job relation is not a Brauer relation");
  for (const auto &r : places)
    r.validate();
}

namespace {

// full local data at p = 2 or above p: Tamagawa ords, deficiency flags and the period-ratio term
std::optional<long> full_lambda(const LocalDataRecord &r, const BrauerRelation &theta, long p, std::string &why) {
  if (r.kind != PlaceKind::nonarchimedean) {
    why = "archimedean place needs an override";
    return std::nullopt;
  }
  std::vector<std::string> need;
  auto gt = missing(r.tamagawa_ord, theta), gd = missing(r.deficiency, theta);
  if (!gt.empty())
    need.push_back("Tamagawa ords for " + list_classes(theta, gt));
  if (p == 2 && !gd.empty())
    need.push_back("deficiency flags for " + list_classes(theta, gd));
  if (!r.c_ratio_ord)
    need.push_back("the period-ratio ord");
  if (!need.empty()) {
    why = "";
    for (const auto &s : need)
      why += (why.empty() ? "" : "; ") + s;
    return std::nullopt;
  }
  long v = signed_sum(r.tamagawa_ord, theta, [](long x) { return x; }) + *r.c_ratio_ord;
  if (p == 2)
    v += signed_sum(r.deficiency, theta, [](int mu) { return mu == 2 ? 1L : 0L; });
  return v;
}

// value computed from component data, if any route applies
std::optional<PlaceContribution> from_components(const ParityJob &job, const LocalDataRecord &r, std::string &why) {
  PlaceContribution c{r.label, 0, {}, {}};
  if (r.kind == PlaceKind::complex) {
    c.value = ord_p_lambda_complex(job.theta, job.omega, job.prime);
    c.provenance = "complex";
    c.formula = "ord_p C_Theta^sf(Omega^1)";
    return c;
  }
  if (r.kind == PlaceKind::nonarchimedean && job.prime != 2 && r.residue_characteristic != job.prime &&
      missing(r.tamagawa_ord, job.theta).empty()) {
    c.value = ord_p_lambda_tamagawa(r, job.theta, job.prime);
    c.provenance = "tamagawa";
    c.formula = "sum ord_p c_v(Jac_X/H) - sum ord_p c_v(Jac_X/H')";
    return c;
  }
  if (auto v = full_lambda(r, job.theta, job.prime, why)) {
    c.value = *v;
    c.provenance = "full-lambda";
    c.formula = job.prime == 2 ? "Tamagawa ords + deficiency ords + period-ratio ord" : "Tamagawa ords + period-ratio ord";
    return c;
  }
  return std::nullopt;
}

} // namespace

ParityReport aggregate_parity(const ParityJob &job) {
  job.validate();
  ParityReport rep;
  for (const auto &r : job.places) {
    std::string why;
    auto computed = from_components(job, r, why);
    if (r.override_ord) {
      rep.contributions.push_back({r.label, *r.override_ord, "user", "supplied ord_p Lambda"});
      if (computed && computed->value != *r.override_ord)
        rep.warnings.push_back("place " + r.label + ": override " + std::to_string(*r.override_ord) + " differs from the " +
                               computed->provenance + " value " + std::to_string(computed->value) +
                               (mod2(computed->value) != mod2(*r.override_ord) ? " (parity differs)" : ""));
      continue;
    }
    if (!computed)
      throw ValidationError("place " + r.label + " cannot be resolved: " + why);
    rep.contributions.push_back(*computed);
  }
  for (const auto &c : rep.contributions)
    rep.total += c.value;
  rep.parity = mod2(rep.total);
  try {
    rep.tau = tau_rep(job.theta, job.prime).tau;
  } catch (const UnsupportedError &e) {
    rep.warnings.push_back(std::string("tau not computed: ") + e.what());
  }
  rep.statement = "<tau_{Theta," + std::to_string(job.prime) + "}, X_" + std::to_string(job.prime) + "(Jac_X)> is " +
                  (rep.parity ? "odd" : "even");
  return rep;
}

namespace {

void require_only_relation(const ParityJob &job, const std::string &group, long p) {
  const auto &g = job.theta.group();
  auto ref = FiniteGroup::from_catalog(group);
  if (g->order() != ref->order() || g->is_abelian() != ref->is_abelian() || g->class_count() != ref->class_count())
    throw ValidationError("recipe needs a job on " + group);
  if (job.prime != p)
    throw ValidationError("recipe needs the " + group + " job at p = " + std::to_string(p));
  auto rels = enumerate_brauer_relations(g);
  if (rels.size() != 1 || !(job.theta == rels[0] || job.theta == Integer(-1) * rels[0]))
    throw ValidationError("recipe needs the primitive relation of " + group);
}

} // namespace

ParityReport elliptic_recipe(const RecipeInput &input) {
  require_only_relation(input.theta_job, "S3", 3);
  require_only_relation(input.psi_job, "C2xC2", 2);
  ParityReport rep;
  rep.parts.push_back(aggregate_parity(input.theta_job));
  rep.parts.push_back(aggregate_parity(input.psi_job));
  rep.total = rep.parts[0].total + rep.parts[1].total;
  rep.parity = mod2(rep.total);
  rep.contributions.push_back({"S3 side", rep.parts[0].total, "aggregate", "sum_v ord_3 Lambda_Theta(B/K_v)"});
  rep.contributions.push_back({"C2xC2 side", rep.parts[1].total, "aggregate", "sum_v ord_2 Lambda_Psi(D/K_v)"});
  if (input.cubic) {
    auto g = discriminant_curve_polynomial(*input.cubic);
    auto split = squarefree_split(g);
    std::string note = "disc_x(f(x) - t) = " + g.to_string("t") + " = " + split.a.get_str() + " * (" +
                       split.g.to_string("t") + ") * (" + split.h.to_string("t") + ")^2";
    if (split.g.degree() == 0)
      note += "; squarefree part constant: the discriminant cover is a constant extension";
    rep.warnings.push_back(note);
  }
  rep.statement = std::string("rk E is ") + (rep.parity ? "odd" : "even");
  return rep;
}

WPrimeReport assemble_w_prime(const std::vector<WPrimePlace> &places) {
  WPrimeReport rep;
  for (const auto &p : places) {
    std::vector<std::string> gaps;
    if (!p.alpha_y)
      gaps.push_back("alpha(Y)");
    if (!p.beta_y)
      gaps.push_back("beta(Y)");
    if (!p.alpha_delta)
      gaps.push_back("alpha(Delta1)");
    if (!p.gamma_delta)
      gaps.push_back("gamma(Delta1)");
    if (!gaps.empty()) {
      std::string s;
      for (const auto &g : gaps)
        s += (s.empty() ? "" : ", ") + g;
      throw ValidationError("place " + p.label + ": missing " + s);
    }
    long e = *p.alpha_y + *p.beta_y + *p.alpha_delta + *p.gamma_delta;
    int sign = mod2(e) ? -1 : 1;
    rep.signs.emplace_back(p.label, sign);
    rep.exponent_total += e;
    rep.global_sign *= sign;
  }
  return rep;
}

} // namespace brauer

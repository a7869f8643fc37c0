#pragma once

#include "brauer/covers.hpp"
#include "brauer/induction.hpp"
#include "brauer/parity.hpp"

#include <json.hpp>

#include <string>

namespace brauer {

using Json = nlohmann::json;

/// Subgroup class by its label ("C2", "C2xC2", "1", ...).
int subgroup_class_by_label(const FiniteGroup &g, const std::string &label);

/// Terms joined by + and -: "chi2", "3*1", "2chi1", "reg", "perm(C2)", "rho(C2)"; a bare integer means that many trivial characters.
ClassFunction parse_character_spec(const GroupPtr &g, const std::string &spec);
/// "reg" and "perm(H)" give permutation models; anything else the rational model of the character.
RationalRepModel parse_model_spec(const GroupPtr &g, const std::string &spec);

/// An index into the enumerated relations, a coefficient array over subgroup classes,
/// an object {label: coefficient}, or a list of {generators, multiplicity}.
BrauerRelation parse_relation(const GroupPtr &g, const Json &j);
/// Multiplicity array over the irreducibles, or {"chi<i>": multiplicity}.
ClassFunction parse_character(const GroupPtr &g, const Json &j);
/// Exact rational coefficients, lowest degree first; numbers or strings "p/q".
RatPoly parse_poly(const Json &j);
/// Comma-separated coefficients, lowest degree first.
RatPoly parse_poly_text(const std::string &text);

ParityJob parse_parity_job(const Json &j);
RecipeInput parse_recipe(const Json &j);
std::vector<WPrimePlace> parse_wprime(const Json &j);
Json read_json_file(const std::string &path);

Json to_json(const Cyclotomic &c);
Json to_json(const ClassFunction &chi);
Json to_json(const CharacterTable &t, const FiniteGroup &g);
Json to_json(const BrauerRelation &theta);
Json to_json(const RatPoly &p);
Json to_json(const SquareClass &c);
Json to_json(const TauRep &t);
Json to_json(const GeneratorAtom &a, const FiniteGroup &g);
Json to_json(const Decomposition &d);
Json to_json(const SnIdentity &s);
Json to_json(const DiscriminantData &d);
Json to_json(const ParityReport &r);
Json to_json(const WPrimeReport &r);

} // namespace brauer

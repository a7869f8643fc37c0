#include "brauer/catalog.hpp"

#include "brauer/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace brauer {

namespace detail {
const char *catalog_json();
}

namespace {

std::vector<CatalogEntry> load_catalog() {
  auto doc = nlohmann::json::parse(detail::catalog_json());
  std::vector<CatalogEntry> out;
  for (const auto &[name, entry] : doc.at("groups").items()) {
    CatalogEntry e;
    e.name = name;
    e.degree = entry.at("degree").get<int>();
    e.generators = entry.at("generators").get<std::vector<std::string>>();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> split_generators(const std::string &text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(')
      ++depth;
    if (c == ')')
      --depth;
    if (depth == 0 && (c == ',' || c == ';' || c == ' ')) {
      if (!cur.empty())
        out.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  if (depth != 0)
    throw ValidationError("unbalanced parentheses in '" + text + "'");
  if (!cur.empty())
    out.push_back(cur);
  return out;
}

} // namespace

const std::vector<CatalogEntry> &catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    auto list = load_catalog();
    std::map<std::string, std::size_t> order;
    for (const auto &e : list) {
      std::vector<Perm> gens;
      for (const auto &g : e.generators)
        gens.push_back(parse_cycles(g, e.degree));
      order[e.name] = FiniteGroup::build(e.degree, gens, e.name)->order();
    }
    std::sort(list.begin(), list.end(), [&](const CatalogEntry &a, const CatalogEntry &b) {
      if (order[a.name] != order[b.name])
        return order[a.name] < order[b.name];
      return a.name < b.name;
    });
    return list;
  }();
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto &e : catalog_entries())
    out.push_back(e.name);
  return out;
}

GroupPtr FiniteGroup::from_catalog(const std::string &name, const GroupLimits &limits) {
  static const auto raw = load_catalog();
  for (const auto &e : raw)
    if (e.name == name) {
      std::vector<Perm> gens;
      for (const auto &g : e.generators)
        gens.push_back(parse_cycles(g, e.degree));
      return build(e.degree, gens, e.name, limits);
    }
  throw ValidationError("unknown catalog group '" + name + "'");
}

GroupPtr FiniteGroup::parse(const std::string &spec, const GroupLimits &limits) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    return from_catalog(spec, limits);
  int degree = 0;
  try {
    degree = std::stoi(spec.substr(0, colon));
  } catch (const std::exception &) {
    throw ValidationError("group spec '" + spec + "' must start with the degree");
  }
  std::vector<Perm> gens;
  for (const auto &g : split_generators(spec.substr(colon + 1)))
    gens.push_back(parse_cycles(g, degree));
  return build(degree, gens, {}, limits);
}

} // namespace brauer

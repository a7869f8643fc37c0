#pragma once

#include "brauer/group.hpp"

#include <string>
#include <vector>

namespace brauer {

struct CatalogEntry {
  std::string name;
  int degree = 1;
  std::vector<std::string> generators; ///< cycle notation
};

/// Entries of the shipped group catalog, sorted by group order then name.
const std::vector<CatalogEntry> &catalog_entries();

std::vector<std::string> catalog_names();

} // namespace brauer

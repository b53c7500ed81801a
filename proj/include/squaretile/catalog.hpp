#pragma once

#include <string>
#include <vector>

#include "squaretile/homology.hpp"
#include "squaretile/origami.hpp"

namespace squaretile {

struct CatalogEntry {
  std::string name;
  std::string origami_text;
  WaistOrder order;        // applied by --basis catalog
  bool has_order = false;
  std::string note;

  Origami origami() const { return parse_origami(origami_text); }
};

/// Lines "name | origami | hint | note"; '#' starts a comment, "-" means no
/// hint. Hints look like "sigma=1,0,2 zeta=0,2,1". Throws InputError on
/// malformed lines and duplicate names.
std::vector<CatalogEntry> parse_catalog(const std::string& text);

/// The catalog compiled into the library from data/catalog.txt.
const std::vector<CatalogEntry>& builtin_catalog();
/// InputError for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace squaretile

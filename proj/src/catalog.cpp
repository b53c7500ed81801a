#include "squaretile/catalog.hpp"

#include <set>
#include <sstream>

#include "catalog_data.hpp"
#include "squaretile/error.hpp"

namespace squaretile {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::size_t> index_list(const std::string& s, std::size_t line) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("catalog line " + std::to_string(line) + ": bad index list '" + s + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  std::stringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (trim(raw).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream row(raw);
    std::string f;
    while (std::getline(row, f, '|')) fields.push_back(trim(f));
    if (fields.size() != 4) throw InputError("catalog line " + std::to_string(line) + ": expected 4 fields");
    CatalogEntry e{fields[0], fields[1], {}, false, fields[3]};
    if (!names.insert(e.name).second) throw InputError("catalog: duplicate name " + e.name);
    parse_origami(e.origami_text);
    if (fields[2] != "-") {
      std::stringstream hints(fields[2]);
      std::string h;
      while (hints >> h) {
        const auto eq = h.find('=');
        const std::string key = h.substr(0, eq);
        if (eq == std::string::npos || (key != "sigma" && key != "zeta"))
          throw InputError("catalog line " + std::to_string(line) + ": bad hint '" + h + "'");
        (key == "sigma" ? e.order.sigma : e.order.zeta) = index_list(h.substr(eq + 1), line);
      }
      e.has_order = true;
    }
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(detail::kCatalogText);
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : builtin_catalog())
    if (e.name == name) return e;
  throw InputError("no catalog entry named '" + name + "'");
}

}  // namespace squaretile

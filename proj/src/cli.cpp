#include "squaretile/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "squaretile/catalog.hpp"
#include "squaretile/density.hpp"
#include "squaretile/error.hpp"
#include "squaretile/invariants.hpp"
#include "squaretile/monodromy.hpp"
#include "squaretile/surgery.hpp"

namespace squaretile {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

struct Source {
  Origami origami;
  std::string name;  // catalog name, empty otherwise
  WaistOrder order;
  bool has_order = false;
};

std::string slurp(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Source resolve(const std::string& arg, std::istream& in) {
  if (!arg.empty() && arg[0] == '@') {
    const auto& e = catalog_entry(arg.substr(1));
    return {e.origami(), e.name, e.order, e.has_order};
  }
  if (arg == "-") return {parse_origami(slurp(in)), "", {}, false};
  if (arg.find('=') == std::string::npos && std::filesystem::is_regular_file(arg)) {
    std::ifstream f(arg);
    if (!f) throw InputError("cannot read " + arg);
    return {parse_origami(slurp(f)), "", {}, false};
  }
  return {parse_origami(arg), "", {}, false};
}

std::array<long, 2> parse_direction(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s.push_back(c);
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("direction '" + text + "' is not of the form p,q");
  try {
    std::size_t u = 0, w = 0;
    const long p = std::stol(s.substr(0, comma), &u);
    const long q = std::stol(s.substr(comma + 1), &w);
    if (u != comma || w != s.size() - comma - 1) throw std::invalid_argument(text);
    return {p, q};
  } catch (const std::logic_error&) {
    throw InputError("direction '" + text + "' is not of the form p,q");
  }
}

std::vector<std::array<long, 2>> directions(const std::vector<std::string>& given) {
  std::vector<std::array<long, 2>> out;
  for (const auto& d : given) out.push_back(normalize_direction(parse_direction(d)));
  if (out.empty()) out = {{1, 0}, {0, 1}};
  return out;
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r)));
  return a;
}

Json sl2z_json(const Sl2z& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

std::string sl2z_text(const Sl2z& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
         std::to_string(m.d) + "]]";
}

std::string vector_text(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

std::string direction_text(std::array<long, 2> d) { return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + ")"; }

Json squares_json(const std::vector<std::size_t>& squares) {
  Json a = Json::array();
  for (auto s : squares) a.push_back(s + 1);
  return a;
}

std::string squares_text(const std::vector<std::size_t>& squares) {
  std::string s = "{";
  for (std::size_t i = 0; i < squares.size(); ++i) s += (i ? "," : "") + std::to_string(squares[i] + 1);
  return s + "}";
}

Matrix parse_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  std::vector<Vector> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols || cols == 0) throw InputError("matrix rows must be arrays of one length");
    Vector r;
    for (const auto& x : row) {
      if (x.is_number_integer()) {
        r.emplace_back(x.get<long>());
      } else if (x.is_string()) {
        try {
          Rational q(x.get<std::string>());
          q.canonicalize();
          r.push_back(q);
        } catch (const std::invalid_argument&) {
          throw InputError("bad matrix entry '" + x.get<std::string>() + "'");
        }
      } else {
        throw InputError("matrix entries must be integers or rational strings like \"3/2\"");
      }
    }
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows, cols);
}

Json stratum_json(const StratumSignature& s) {
  Json z = Json::array();
  for (auto k : s.zero_orders) z.push_back(k);
  return {{"text", s.to_string()}, {"zero_orders", z}, {"marked_points", s.marked_regular_points}, {"genus", s.genus}};
}

Json cylinder_table_json(const Homology& hom, std::array<long, 2> dir) {
  const auto norm = normalize_direction(dir);
  Json list = Json::array();
  for (const auto& c : cylinders(hom.origami(), norm))
    list.push_back({{"circumference", c.circumference},
                    {"height", c.height},
                    {"squares", squares_json(c.squares())},
                    {"waist", vector_json(waist_class(hom, c))}});
  return {{"direction", Json::array({norm[0], norm[1]})}, {"cylinders", list}};
}

std::string cylinder_table_text(const Origami& o, std::array<long, 2> dir) {
  const auto norm = normalize_direction(dir);
  std::string s = direction_text(norm) + ":";
  for (const auto& c : cylinders(o, norm))
    s += " " + std::to_string(c.circumference) + "x" + std::to_string(c.height) + " " + squares_text(c.squares());
  return s;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---- commands

struct Common {
  std::string input;
  bool json = false;
  std::vector<std::string> dirs;
};

int cmd_analyze(const Common& c, std::istream& in, std::ostream& out) {
  const Source src = resolve(c.input, in);
  const Origami& o = src.origami;
  const Homology hom(o);
  const auto st = stratum(o);
  ensure(hom.genus() == st.genus, "rank of H_1 disagrees with the stratum genus");

  std::optional<SpinData> spin;
  std::string spin_note;
  try {
    spin = spin_parity(hom);
  } catch (const InputError& e) {
    spin_note = e.what();
  }
  const auto inv = hyperelliptic_involution(o);
  const auto dirs = directions(c.dirs);

  if (c.json) {
    Json j{{"schema", kSchema}, {"command", "analyze"}, {"origami", o.to_string()}};
    if (!src.name.empty()) j["name"] = src.name;
    j["squares"] = o.size();
    j["stratum"] = stratum_json(st);
    j["homology_rank"] = hom.rank();
    if (spin) {
      std::vector<int> vals = spin->basis_values;
      j["spin"] = {{"parity", spin->parity}, {"label", spin->parity ? "odd" : "even"}, {"basis_values", vals}};
    } else {
      j["spin"] = nullptr;
      j["spin_note"] = spin_note;
    }
    if (inv) {
      Json shift = Json::array();
      for (int h : inv->shift_halves) shift.push_back(h ? "1/2" : "0");
      j["involution"] = {{"found", true},
                         {"shift", shift},
                         {"square_map", inv->square_map.to_cycle_string()},
                         {"fixed_points", inv->fixed_points()},
                         {"fixed_vertices", inv->fixed_vertices},
                         {"fixed_edge_points", inv->fixed_edge_points},
                         {"fixed_interior_points", inv->fixed_interior_points},
                         {"hyperelliptic", inv->hyperelliptic}};
    } else {
      j["involution"] = {{"found", false}};
    }
    Json tables = Json::array();
    for (auto d : dirs) tables.push_back(cylinder_table_json(hom, d));
    j["cylinders"] = tables;
    emit(out, j);
    return 0;
  }

  out << "origami     " << o.to_string() << "\n";
  if (!src.name.empty()) out << "name        " << src.name << "\n";
  out << "squares     " << o.size() << "\n";
  out << "stratum     " << st.to_string();
  if (st.marked_regular_points) out << " + " << st.marked_regular_points << " marked";
  out << "\ngenus       " << st.genus << "\n";
  if (spin)
    out << "spin        " << (spin->parity ? "odd" : "even") << " (" << spin->parity << ")\n";
  else
    out << "spin        undefined: " << spin_note << "\n";
  if (inv) {
    out << "involution  shift (" << (inv->shift_halves[0] ? "1/2" : "0") << "," << (inv->shift_halves[1] ? "1/2" : "0")
        << "), " << inv->fixed_points() << " fixed points (vertices " << inv->fixed_vertices << ", edges "
        << inv->fixed_edge_points << ", interior " << inv->fixed_interior_points << ")"
        << (inv->hyperelliptic ? ", hyperelliptic" : "") << "\n";
  } else {
    out << "involution  none\n";
  }
  for (std::size_t k = 0; k < dirs.size(); ++k)
    out << (k ? "            " : "cylinders   ") << cylinder_table_text(o, dirs[k]) << "\n";
  return 0;
}

int cmd_cylinders(const Common& c, std::istream& in, std::ostream& out) {
  const Source src = resolve(c.input, in);
  const Homology hom(src.origami);
  const auto dirs = directions(c.dirs);
  if (c.json) {
    Json tables = Json::array();
    for (auto d : dirs) tables.push_back(cylinder_table_json(hom, d));
    emit(out, {{"schema", kSchema}, {"command", "cylinders"}, {"origami", src.origami.to_string()}, {"tables", tables}});
    return 0;
  }
  for (auto d : dirs) {
    const auto norm = normalize_direction(d);
    out << "direction " << direction_text(norm) << "\n";
    for (const auto& cyl : cylinders(src.origami, norm))
      out << "  circumference " << cyl.circumference << "  height " << cyl.height << "  squares "
          << squares_text(cyl.squares()) << "  waist " << vector_text(waist_class(hom, cyl)) << "\n";
  }
  return 0;
}

struct MonodromyArgs {
  std::string basis = "catalog";
  bool perp = false;
};

int cmd_monodromy(const Common& c, const MonodromyArgs& m, std::istream& in, std::ostream& out) {
  const Source src = resolve(c.input, in);
  const Homology hom(src.origami);
  const WaistOrder* order = m.basis == "catalog" && src.has_order ? &src.order : nullptr;
  const PerpBasis perp = perp_subspace(hom, order);
  const auto dirs = directions(c.dirs);
  const Matrix perp_gram = [&] {
    Matrix g(perp.vectors.size(), perp.vectors.size());
    for (std::size_t i = 0; i < perp.vectors.size(); ++i)
      for (std::size_t j = 0; j < perp.vectors.size(); ++j) g(i, j) = hom.pairing(perp.vectors[i], perp.vectors[j]);
    return g;
  }();

  struct Row {
    MultitwistAction mt;
    Matrix p;
  };
  std::vector<Row> rows;
  for (auto d : dirs) {
    auto mt = multitwist(hom, d);
    Matrix p = perp_matrix(mt, perp);
    rows.push_back({std::move(mt), std::move(p)});
  }

  if (c.json) {
    Json j{{"schema", kSchema}, {"command", "monodromy"}, {"origami", src.origami.to_string()}, {"basis", m.basis}};
    Json chains = Json::array();
    for (const auto& b : hom.basis()) chains.push_back(chain_to_string(b, src.origami.size()));
    j["homology_basis"] = chains;
    j["gram"] = matrix_json(hom.gram());
    Json pv = Json::array();
    for (const auto& v : perp.vectors) pv.push_back(vector_json(v));
    j["perp"] = {{"labels", perp.labels}, {"vectors", pv}, {"from_waists", perp.from_waists}, {"gram", matrix_json(perp_gram)}};
    Json list = Json::array(), gens = Json::array();
    for (const auto& r : rows) {
      list.push_back({{"direction", Json::array({r.mt.direction[0], r.mt.direction[1]})},
                      {"derivative", sl2z_json(r.mt.derivative)},
                      {"shear", r.mt.shear},
                      {"sign", r.mt.sign},
                      {"twist_counts", r.mt.twist_counts},
                      {"matrix_h1", matrix_json(r.mt.matrix_h1)},
                      {"cohomology_matrix", matrix_json(cohomology_matrix(r.mt.matrix_h1))},
                      {"perp_matrix", matrix_json(r.p)},
                      {"perp_cohomology_matrix", r.p.rows() ? matrix_json(cohomology_matrix(r.p)) : Json::array()}});
      gens.push_back(matrix_json(m.perp ? r.p : r.mt.matrix_h1));
    }
    j["directions"] = list;
    // What `density` reads.
    j["generators"] = gens;
    j["form"] = matrix_json(m.perp ? perp_gram : hom.gram());
    emit(out, j);
    return 0;
  }

  out << "origami  " << src.origami.to_string() << "\n";
  out << "perp     ";
  for (std::size_t k = 0; k < perp.labels.size(); ++k) out << (k ? ", " : "") << perp.labels[k];
  out << "\n";
  for (const auto& r : rows) {
    out << "direction " << direction_text(r.mt.direction) << "\n";
    out << "  derivative  " << sl2z_text(r.mt.derivative) << "  shear " << r.mt.shear << "  twists";
    for (auto t : r.mt.twist_counts) out << " " << t;
    out << "\n";
    if (!m.perp) {
      out << "  H1          " << r.mt.matrix_h1.to_string() << "\n";
      out << "  cohomology  " << cohomology_matrix(r.mt.matrix_h1).to_string() << "\n";
    }
    out << "  perp        " << r.p.to_string() << "\n";
    if (m.perp && r.p.rows()) out << "  cohomology  " << cohomology_matrix(r.p).to_string() << "\n";
  }
  return 0;
}

struct DensityArgs {
  std::size_t max_word_length = 8;
  std::vector<std::string> words;
  bool basis = false;
};

int cmd_density(const Common& c, const DensityArgs& d, std::istream& in, std::ostream& out) {
  std::string text;
  if (c.input.empty() || c.input == "-") {
    text = slurp(in);
  } else {
    std::ifstream f(c.input);
    if (!f) throw InputError("cannot read " + c.input);
    text = slurp(f);
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("density input is not JSON: ") + e.what());
  }
  std::vector<Matrix> gens;
  DensityOptions opts;
  opts.max_word_length = d.max_word_length;
  const Json* list = &j;
  if (j.is_object()) {
    if (j.contains("generators"))
      list = &j["generators"];
    else if (j.contains("matrices"))
      list = &j["matrices"];
    else
      throw InputError("density input needs a \"generators\" or \"matrices\" array");
    if (j.contains("form") && !j["form"].is_null()) opts.form = parse_matrix(j["form"]);
  }
  if (!list->is_array()) throw InputError("generators must be an array of matrices");
  for (const auto& m : *list) gens.push_back(parse_matrix(m));

  const auto cert = lie_closure(gens, opts);
  std::vector<std::pair<std::string, Matrix>> conj;
  if (!d.words.empty()) {
    const Matrix seed = nilpotent_log(gens.front());
    for (const auto& w : d.words) conj.emplace_back(w, conjugate_by_word(gens, w, seed));
  }
  const std::string verdict = cert.dense ? "dense" : "inconclusive";

  if (c.json) {
    Json o{{"schema", kSchema},
           {"command", "density"},
           {"verdict", verdict},
           {"dense", cert.dense},
           {"dimension", cert.dimension},
           {"target_dimension", cert.target_dimension},
           {"closed", cert.closed},
           {"levels", cert.levels},
           {"form", matrix_json(cert.form)},
           {"witness", cert.witness_log}};
    if (d.basis) {
      Json b = Json::array();
      for (const auto& l : cert.algebra_basis) b.push_back(matrix_json(l));
      o["algebra_basis"] = b;
    }
    if (!conj.empty()) {
      Json cl = Json::array();
      for (const auto& [w, m] : conj)
        cl.push_back({{"word", w}, {"matrix", matrix_json(m)}, {"in_closure", cert.contains(m)}});
      o["conjugates"] = cl;
    }
    emit(out, o);
  } else {
    out << "verdict    " << verdict << "\n";
    out << "dimension  " << cert.dimension << " of " << cert.target_dimension << "\n";
    out << "closed     " << (cert.closed ? "yes" : "no") << "\n";
    out << "levels     " << cert.levels << "\n";
    out << "form       " << cert.form.to_string() << "\n";
    for (std::size_t k = 0; k < cert.witness_log.size(); ++k)
      out << (k ? "           " : "witness    ") << cert.witness_log[k] << "\n";
    if (d.basis)
      for (const auto& l : cert.algebra_basis) out << "basis      " << l.to_string() << "\n";
    for (const auto& [w, m] : conj)
      out << "Ad(" << w << ") log A  " << m.to_string() << (cert.contains(m) ? "" : "  (not in closure)") << "\n";
  }
  return cert.dense ? 0 : 3;
}

int cmd_bubble(const Common& c, std::size_t slit, std::istream& in, std::ostream& out) {
  const Source src = resolve(c.input, in);
  if (slit == 0) throw InputError("--slit takes a 1-based square number");
  const Origami b = bubble_square_handle(src.origami, {slit - 1});
  if (c.json) {
    emit(out, {{"schema", kSchema},
               {"command", "bubble"},
               {"origami", src.origami.to_string()},
               {"slit", slit},
               {"result", b.to_string()},
               {"stratum_before", stratum_json(stratum(src.origami))},
               {"stratum", stratum_json(stratum(b))}});
  } else {
    out << b.to_string() << "\n";
  }
  return 0;
}

int cmd_iso(const Common& c, const std::string& other, std::istream& in, std::ostream& out) {
  const Source a = resolve(c.input, in), b = resolve(other, in);
  const auto p = iso(a.origami, b.origami);
  const std::size_t automorphisms = aut(a.origami).size();
  if (c.json) {
    Json j{{"schema", kSchema}, {"command", "iso"}, {"first", a.origami.to_string()}, {"second", b.origami.to_string()},
           {"isomorphic", p.has_value()}};
    if (p) {
      Json img = Json::array();
      for (auto x : p->images()) img.push_back(x + 1);
      j["relabeling"] = img;
      j["relabeling_cycles"] = p->to_cycle_string();
    }
    j["automorphisms"] = automorphisms;
    emit(out, j);
  } else {
    if (p)
      out << "isomorphic  " << p->to_cycle_string() << "\n";
    else
      out << "not isomorphic\n";
    out << "automorphisms of the first: " << automorphisms << "\n";
  }
  return 0;
}

int cmd_catalog(const Common& c, std::ostream& out) {
  if (!c.input.empty()) {
    const auto& e = catalog_entry(c.input[0] == '@' ? c.input.substr(1) : c.input);
    if (c.json)
      emit(out, {{"schema", kSchema}, {"command", "catalog"}, {"name", e.name}, {"origami", e.origami().to_string()}, {"note", e.note}});
    else
      out << e.origami().to_string() << "\n";
    return 0;
  }
  if (c.json) {
    Json list = Json::array();
    for (const auto& e : builtin_catalog())
      list.push_back({{"name", e.name}, {"origami", e.origami().to_string()}, {"note", e.note}});
    emit(out, {{"schema", kSchema}, {"command", "catalog"}, {"entries", list}});
  } else {
    for (const auto& e : builtin_catalog()) out << e.name << "  " << e.origami().to_string() << "  # " << e.note << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square-tiled surfaces: strata, cylinders, multitwists, invariants and density", "squaretile"};
  app.require_subcommand(1);

  Common common;
  MonodromyArgs mono;
  DensityArgs dens;
  std::size_t slit = 0;
  std::string other;

  auto add_input = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("origami", common.input, "inline text, @catalog-name, a file, or - for stdin");
    if (required) opt->required();
    sub->add_flag("--json", common.json, "JSON output");
  };
  auto* analyze = app.add_subcommand("analyze", "stratum, spin parity, involution and cylinder tables");
  add_input(analyze);
  analyze->add_option("-d,--direction", common.dirs, "direction p,q (repeatable)");

  auto* cyl = app.add_subcommand("cylinders", "cylinder decompositions with waist classes");
  add_input(cyl);
  cyl->add_option("-d,--direction", common.dirs, "direction p,q (repeatable)");

  auto* mon = app.add_subcommand("monodromy", "multitwist matrices on homology and on the holonomy kernel");
  add_input(mon);
  mon->add_option("-d,--direction", common.dirs, "direction p,q (repeatable)");
  mon->add_option("--basis", mono.basis, "catalog (apply the catalog waist order) or canonical")
      ->check(CLI::IsMember({"catalog", "canonical"}));
  mon->add_flag("--perp", mono.perp, "generators restricted to the holonomy kernel");

  auto* den = app.add_subcommand("density", "Zariski density certificate for unipotent generators");
  den->add_option("input", common.input, "JSON file (monodromy --json output or {\"matrices\": ...}); default stdin");
  den->add_flag("--json", common.json, "JSON output");
  den->add_option("--max-word-length", dens.max_word_length, "conjugation rounds")->check(CLI::NonNegativeNumber);
  den->add_option("--word", dens.words, "also print Ad(word) log A (repeatable)");
  den->add_flag("--basis", dens.basis, "print the algebra basis");

  auto* bub = app.add_subcommand("bubble", "bubble a square handle into a unit slit");
  add_input(bub);
  bub->add_option("--slit", slit, "square whose top edge is slit (1-based)")->required();

  auto* is = app.add_subcommand("iso", "isomorphism test by relabeling");
  add_input(is);
  is->add_option("other", other, "second origami")->required();

  auto* cat = app.add_subcommand("catalog", "list the bundled origamis");
  add_input(cat, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(common, in, out);
    if (cyl->parsed()) return cmd_cylinders(common, in, out);
    if (mon->parsed()) return cmd_monodromy(common, mono, in, out);
    if (den->parsed()) return cmd_density(common, dens, in, out);
    if (bub->parsed()) return cmd_bubble(common, slit, in, out);
    if (is->parsed()) return cmd_iso(common, other, in, out);
    if (cat->parsed()) return cmd_catalog(common, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace squaretile

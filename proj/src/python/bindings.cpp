#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "squaretile/catalog.hpp"
#include "squaretile/cli.hpp"
#include "squaretile/density.hpp"
#include "squaretile/error.hpp"
#include "squaretile/invariants.hpp"
#include "squaretile/monodromy.hpp"
#include "squaretile/surgery.hpp"

namespace py = pybind11;
using namespace squaretile;

namespace {

// Rationals cross over as fractions.Fraction so nothing is rounded.
py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.get_str());
}

py::list to_py(const Vector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_fraction(x));
  return out;
}

py::list to_py(const Matrix& m) {
  py::list out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.append(to_py(m.row(r)));
  return out;
}

Matrix from_py(const std::vector<std::vector<py::object>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      Rational x(py::str(rows[r][c]).cast<std::string>());
      x.canonicalize();
      m(r, c) = x;
    }
  }
  return m;
}

std::vector<int> one_based(const Permutation& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(static_cast<int>(p(i)) + 1);
  return out;
}

}  // namespace

PYBIND11_MODULE(_squaretile, m) {
  m.doc() = "Square-tiled surfaces: cylinders, homology, monodromy, Zariski density";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Origami>(m, "Origami")
      .def(py::init(&parse_origami), py::arg("text"))
      .def_property_readonly("n", &Origami::size)
      .def_property_readonly("h", [](const Origami& o) { return one_based(o.h()); })
      .def_property_readonly("v", [](const Origami& o) { return one_based(o.v()); })
      .def("__len__", &Origami::size)
      .def("__str__", &Origami::to_string)
      .def("__repr__", [](const Origami& o) { return "Origami('" + o.to_string() + "')"; })
      .def("__eq__", [](const Origami& a, const Origami& b) { return a == b; })
      .def("act", [](const Origami& o, long a, long b, long c, long d) { return sl2z_act(Sl2z::checked(a, b, c, d), o); })
      .def("is_isomorphic", [](const Origami& a, const Origami& b) { return iso(a, b).has_value(); });

  m.def("catalog", [](const std::string& name) { return catalog_entry(name).origami(); }, py::arg("name"));
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : builtin_catalog()) names.push_back(e.name);
    return names;
  });

  m.def("stratum", [](const Origami& o) {
    const auto s = stratum(o);
    py::dict d;
    d["zero_orders"] = s.zero_orders;
    d["genus"] = s.genus;
    d["marked_regular_points"] = s.marked_regular_points;
    d["name"] = s.to_string();
    return d;
  });

  m.def("cylinders", [](const Origami& o, std::array<long, 2> dir) {
    py::list out;
    for (const auto& c : cylinders(o, dir)) {
      py::dict d;
      d["circumference"] = c.circumference;
      d["height"] = c.height;
      std::vector<std::size_t> sq;
      for (auto s : c.squares()) sq.push_back(s + 1);
      d["squares"] = sq;
      out.append(d);
    }
    return out;
  }, py::arg("origami"), py::arg("direction") = std::array<long, 2>{1, 0});

  m.def("intersection_form", [](const Origami& o) { return to_py(Homology(o).gram()); });

  m.def("monodromy", [](const Origami& o, std::array<long, 2> dir, bool perp) {
    const Homology hom(o);
    const auto mt = multitwist(hom, dir);
    if (!perp) return to_py(mt.matrix_h1);
    return to_py(perp_matrix(mt, perp_subspace(hom)));
  }, py::arg("origami"), py::arg("direction"), py::arg("perp") = false);

  m.def("is_dense", [](const std::vector<std::vector<std::vector<py::object>>>& gens, std::size_t max_word_length) {
    std::vector<Matrix> ms;
    for (const auto& g : gens) ms.push_back(from_py(g));
    DensityOptions opt;
    opt.max_word_length = max_word_length;
    const auto cert = lie_closure(ms, opt);
    py::dict d;
    d["dense"] = cert.dense;
    d["dimension"] = cert.dimension;
    d["target_dimension"] = cert.target_dimension;
    d["levels"] = cert.levels;
    d["witness_log"] = cert.witness_log;
    return d;
  }, py::arg("generators"), py::arg("max_word_length") = 8);

  m.def("spin_parity", [](const Origami& o) { return spin_parity(Homology(o)).parity; });

  m.def("hyperelliptic", [](const Origami& o) {
    const auto w = hyperelliptic_involution(o);
    return w && w->hyperelliptic;
  });

  m.def("bubble", [](const Origami& o, std::size_t slit) {
    if (slit == 0) throw InputError("slits are numbered from 1");
    return bubble_square_handle(o, SlitSpec{slit - 1});
  }, py::arg("origami"), py::arg("slit"));

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}

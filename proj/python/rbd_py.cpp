#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "rbd/blowdown.hpp"
#include "rbd/io.hpp"
#include "rbd/lens.hpp"

namespace py = pybind11;
using namespace rbd;

namespace {

// Exact values cross the boundary as Python int and fractions.Fraction.
py::object to_py(const Integer& x) { return py::int_(py::str(x.get_str())); }

py::object to_py(const Rational& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(x.get_str()));
}

py::list to_py(const IntVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const IntMatrix& a) {
  py::list out;
  for (std::size_t i = 0; i < a.rows(); ++i) out.append(to_py(a.row(i)));
  return out;
}

Integer to_integer(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

IntVector to_vector(const py::sequence& s) {
  IntVector v;
  for (const auto& h : s) v.push_back(to_integer(h));
  return v;
}

IntMatrix to_matrix(const py::sequence& rows) {
  const std::size_t n = rows.size();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = rows[i].cast<py::sequence>();
    if (row.size() != n) throw Error(Errc::NotSquare, "form must be square");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = to_integer(row[j]);
  }
  return a;
}

IntVector weights_of(const PlumbingGraph& g) {
  IntVector w;
  for (const auto& v : g.vertices()) w.push_back(v.weight);
  return w;
}

py::dict lens_dict(const LensSpace& l) {
  py::dict d;
  d["p"] = to_py(l.p);
  d["q"] = to_py(l.q);
  d["orientation"] = l.orientation;
  d["text"] = format_lens(l);
  return d;
}

py::list d_table(const py::sequence& form, const std::string& box, unsigned jobs) {
  const SpincLattice lat(to_matrix(form));
  const auto t = d_invariant_table(lat, {parse_box_preset(box), 3, jobs});
  py::list out;
  for (const auto& e : t.entries) {
    py::dict row;
    row["key"] = to_py(e.key);
    row["representative"] = to_py(e.representative);
    row["d"] = to_py(e.d);
    row["witness"] = to_py(e.witness);
    out.append(row);
  }
  return out;
}

py::dict full_path_dict(const py::sequence& form, const py::sequence& k) {
  const SpincLattice lat(to_matrix(form));
  const auto p = full_path(lat, to_vector(k));
  py::list vectors;
  for (const auto& v : p.vectors) vectors.append(to_py(v));
  py::dict d;
  d["vectors"] = vectors;
  d["moves"] = p.moves;
  d["condition"] = p.condition;
  return d;
}

py::list extending_classes(const py::sequence& form, const py::sequence& intersections, const py::handle& framing) {
  const SpincLattice lat(to_matrix(form));
  const auto table = d_invariant_table(lat);
  const auto rep = extension_classes(lat, table, BallHandleSpec{to_vector(intersections), to_integer(framing)});
  py::list out;
  for (const auto& c : rep.classes)
    if (c.extends) out.append(to_py(c.representative));
  return out;
}

py::list extension_sets(const py::sequence& form) {
  const SpincLattice lat(to_matrix(form));
  const auto table = d_invariant_table(lat);
  py::list out;
  for (const auto& s : conjugation_closed_extension_sets(lat, table)) {
    py::list reps;
    for (const auto& key : s) reps.append(to_py(table.at(key).representative));
    out.append(reps);
  }
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(rbd, m) {
  m.doc() = "Exact lattice computations for plumbings, d-invariants and rational blow-downs";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("determinant", [](const py::sequence& a) { return to_py(determinant(to_matrix(a))); });
  m.def("invariant_factors", [](const py::sequence& a) {
    return to_py(smith_normal_form(to_matrix(a)).invariant_factors());
  });
  m.def("is_negative_definite", [](const py::sequence& a) { return is_negative_definite(to_matrix(a)); });

  m.def("chain_form", [](const py::sequence& w) { return to_py(intersection_form(linear_chain(to_vector(w)))); },
        py::arg("weights"));
  m.def("park_chain", [](long p, long q) { return to_py(weights_of(park_chain(p, q))); }, py::arg("p"), py::arg("q"));
  m.def("wahl_form", [](long p, long q, long r) { return to_py(intersection_form(wahl_graph(p, q, r))); });
  m.def("graph_form", [](const std::string& text) { return to_py(intersection_form(parse_graph(text).graph)); },
        py::arg("text"));
  m.def("family_form", [](int n, bool mirror) { return to_py(family_form(n, mirror)); }, py::arg("n"),
        py::arg("mirror") = false);
  m.def("cfrac", [](const py::handle& p, const py::handle& q) { return to_py(cfrac_expand(to_integer(p), to_integer(q))); });

  m.def("square", [](const py::sequence& a, const py::sequence& k) {
    return to_py(SpincLattice(to_matrix(a)).square(to_vector(k)));
  });
  m.def("class_count", [](const py::sequence& a) { return to_py(SpincLattice(to_matrix(a)).class_count()); });
  m.def("d_table", &d_table, py::arg("form"), py::arg("box") = "wide", py::arg("jobs") = 1u);
  m.def("sharp_vectors", [](const py::sequence& a, const std::string& box) {
        py::list out;
        for (const auto& k : sharp_vectors(SpincLattice(to_matrix(a)), parse_box_preset(box))) out.append(to_py(k));
        return out;
      },
      py::arg("form"), py::arg("box") = "initial");
  m.def("full_path", &full_path_dict, py::arg("form"), py::arg("k"));

  m.def("extending_classes", &extending_classes, py::arg("form"), py::arg("intersections"), py::arg("framing"));
  m.def("extension_sets", &extension_sets, py::arg("form"));

  m.def("goeritz_form", [](const std::string& text, py::object basepoint) {
        const auto d = parse_diagram(text);
        const std::size_t b = basepoint.is_none() ? d.white_regions - 1 : basepoint.cast<std::size_t>();
        return to_py(goeritz_form(d, b).form);
      },
      py::arg("text"), py::arg("basepoint") = py::none());

  m.def("lens_equiv", [](const py::handle& p, const py::handle& q, int o, const py::handle& p2, const py::handle& q2,
                         int o2) {
    return lens_equiv(make_lens(to_integer(p), to_integer(q), o), make_lens(to_integer(p2), to_integer(q2), o2));
  });
  m.def("chain_boundary", [](const py::sequence& w) { return lens_dict(chain_boundary(to_vector(w))); });

  m.def("fixture_names", &cli::fixture_names);
  m.def("run_fixture", [](const std::string& name) { return cli::run_fixture(name).ok(); });
  m.def("cli", &run_cli, py::arg("args"));
}

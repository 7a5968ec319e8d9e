#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "foxcolor/arc_matrix.hpp"
#include "foxcolor/cli.hpp"
#include "foxcolor/error.hpp"
#include "foxcolor/euler_graph.hpp"
#include "foxcolor/exact_linalg.hpp"
#include "foxcolor/fox_coloring.hpp"
#include "foxcolor/gauss_code.hpp"
#include "foxcolor/json_io.hpp"
#include "foxcolor/kh_verify.hpp"

namespace py = pybind11;
using namespace foxcolor;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(to_decimal(v))); }

py::list to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_py(m(r, c)));
    rows.append(row);
  }
  return rows;
}

IntMatrix from_py(const py::sequence& rows) {
  std::vector<std::vector<BigInt>> out;
  for (const auto& row : rows) {
    std::vector<BigInt> values;
    for (const auto& v : py::reinterpret_borrow<py::sequence>(row)) {
      values.emplace_back(py::str(py::int_(py::reinterpret_borrow<py::object>(v))).cast<std::string>());
    }
    out.push_back(std::move(values));
  }
  return IntMatrix::from_rows(out);
}

// JSON reports cross into Python as dicts via the json module.
py::object to_py(const json::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fox colorings, determinants and Euler circuits of virtual knot Gauss codes";

  py::register_exception<Error>(m, "FoxcolorError", PyExc_ValueError);

  py::class_<GaussCode>(m, "GaussCode")
      .def(py::init([](const std::string& text) { return parse_gauss_code(text); }), py::arg("text") = "")
      .def_property_readonly("k", &GaussCode::k)
      .def_property_readonly("visits",
                             [](const GaussCode& c) {
                               py::list out;
                               for (const Visit& v : c.visits()) {
                                 py::object sign = py::none();
                                 if (v.sign) sign = py::str(*v.sign == Sign::Positive ? "+" : "-");
                                 out.append(py::make_tuple(v.label, v.pass == Pass::Over ? "O" : "U", sign));
                               }
                               return out;
                             })
      .def("__str__", &GaussCode::str)
      .def("__repr__", [](const GaussCode& c) { return "GaussCode('" + c.str() + "')"; })
      .def("__len__", &GaussCode::size)
      .def(py::self == py::self);

  m.def("parse_gauss_code", &parse_gauss_code, py::arg("text"));
  m.def("is_alternating", &is_alternating, py::arg("code"));
  m.def("isolated_chords", &isolated_chords, py::arg("code"));
  m.def("is_reduced", &is_reduced, py::arg("code"));
  m.def("mirror", &mirror, py::arg("code"));
  m.def("connected_sum", &connected_sum, py::arg("a"), py::arg("b"), py::arg("b_offset") = 0);
  m.def("find_summand_split", &find_summand_split, py::arg("code"));
  m.def("classify", [](const GaussCode& c) { return to_py(json::to_json(classify(c), c)); }, py::arg("code"));
  m.def("random_alternating", &random_alternating, py::arg("k"), py::arg("seed"));
  m.def("random_reduced_alternating", &random_reduced_alternating, py::arg("k"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());

  m.def("coloring_matrix", [](const GaussCode& c) { return to_py(json::to_json(coloring_matrix(c))); },
        py::arg("code"));
  m.def("canonical_alternating_labeling",
        [](const GaussCode& c) { return to_py(json::to_json(canonical_alternating_labeling(c))); },
        py::arg("code"));
  m.def("diagram_determinant", [](const GaussCode& c) { return to_py(diagram_determinant(c)); },
        py::arg("code"));

  m.def("det", [](const py::sequence& rows) { return to_py(det(from_py(rows))); }, py::arg("matrix"));
  m.def("minor", [](const py::sequence& rows, std::size_t i, std::size_t j) {
        return to_py(minor(from_py(rows), i, j));
      }, py::arg("matrix"), py::arg("i"), py::arg("j"), "0-based row/column to delete");
  m.def("all_cofactors", [](const py::sequence& rows) { return to_py(all_cofactors(from_py(rows))); },
        py::arg("matrix"));
  m.def("nullspace_mod_p", [](const py::sequence& rows, std::uint64_t p) {
        py::list out;
        for (const ModPVector& v : nullspace_mod_p(from_py(rows), p)) out.append(py::cast(v.entries));
        return out;
      }, py::arg("matrix"), py::arg("p"));

  m.def("coloring_space", [](const GaussCode& c, std::uint64_t p) {
        const ColoringSpace s = coloring_space(c, p);
        py::list basis;
        for (const ModPVector& v : s.basis) basis.append(py::cast(v.entries));
        py::object rep = py::none();
        if (auto r = nontrivial_representative(s)) rep = py::cast(r->values);
        py::dict out;
        out["p"] = p;
        out["dimension"] = s.dimension();
        out["basis"] = basis;
        out["representative"] = rep;
        out["fundamental"] = has_fundamental_coloring(s);
        return out;
      }, py::arg("code"), py::arg("p"));
  m.def("is_heterogeneous", [](const std::vector<std::uint64_t>& values, std::uint64_t n) {
        return is_heterogeneous(Coloring{n, values});
      }, py::arg("values"), py::arg("n"));
  m.def("dihedral_quandle_colorings", [](const GaussCode& c, std::size_t n) {
        return brute_force_quandle_colorings(c, dihedral_quandle(n)).count;
      }, py::arg("code"), py::arg("n"), py::call_guard<py::gil_scoped_release>());
  m.def("dihedral_quandle_violations", [](std::size_t n) {
        return check_quandle_axioms(dihedral_quandle(n)).size();
      }, py::arg("n"));

  m.def("euler_graph", [](const GaussCode& c) { return to_py(json::to_json(build_euler_graph(c))); },
        py::arg("code"));
  m.def("euler_circuit_count", [](const GaussCode& c, bool brute) {
        const DirectedMultigraph g = build_euler_graph(c);
        return to_py(brute ? euler_circuit_count_bruteforce(g) : euler_circuit_count_best(g));
      }, py::arg("code"), py::arg("brute_force") = false);
  m.def("articulation_vertices", [](const GaussCode& c) {
        return articulation_vertices(build_euler_graph(c));
      }, py::arg("code"));

  m.def("verify_kh", [](const GaussCode& c) { return to_py(json::to_json(verify_kh(c))); }, py::arg("code"));
  m.def("lemma22_check", [](const GaussCode& c) { return to_py(json::to_json(lemma22_check(c))); },
        py::arg("code"));
  m.def("fuzz", [](std::size_t k_min, std::size_t k_max, std::size_t samples, std::uint64_t seed,
                   const std::string& checks) {
        FuzzConfig cfg;
        cfg.k_min = k_min;
        cfg.k_max = k_max;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.checks = parse_checks(checks);
        FuzzReport r;
        {
          py::gil_scoped_release release;
          r = fuzz(cfg);
        }
        return to_py(json::to_json(r));
      }, py::arg("k_min") = 3, py::arg("k_max") = 6, py::arg("samples") = 10, py::arg("seed") = 7,
      py::arg("checks") = "all");

  m.def("run_cli", [](const std::vector<std::string>& args) {
        std::istringstream in;
        std::ostringstream out, err;
        const int rc = cli::run(args, in, out, err);
        return py::make_tuple(rc, out.str(), err.str());
      }, py::arg("args"), "Run a CLI invocation in-process; returns (exit_code, stdout, stderr)");
}

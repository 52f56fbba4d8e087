#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "detarr/arrangement.hpp"
#include "detarr/derivation.hpp"
#include "detarr/graph.hpp"
#include "detarr/topology.hpp"

namespace py = pybind11;
using namespace detarr;

namespace {

py::object to_py(const Integer& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

VarId parse_var(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) throw py::value_error("variable must look like x3 or y3");
  const int index = std::stoi(name.substr(1));
  return name[0] == 'x' ? VarId::x(index) : VarId::y(index);
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict saito_dict(const SaitoReport& r) {
  py::dict d;
  d["mode"] = r.mode == SaitoMode::Symbolic ? "symbolic" : "randomized";
  d["basis"] = r.basis;
  d["c_num"] = to_py(r.c_num);
  d["c_den"] = to_py(r.c_den);
  d["f_degree"] = r.f_degree;
  d["determinant_degree"] = r.determinant_degree ? py::object(py::int_(*r.determinant_degree)) : py::none();
  d["determinant"] = r.determinant ? py::object(py::str(r.determinant->to_string())) : py::none();
  d["reason"] = r.reason;
  if (r.mode == SaitoMode::Randomized) {
    d["seed"] = r.seed;
    py::list pts;
    for (const auto& p : r.sample_points) {
      py::list row;
      for (const auto& v : p) row.append(to_py(v));
      pts.append(row);
    }
    d["points"] = pts;
    d["failure_bound"] = r.failure_bound;
  }
  d["seconds"] = r.seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Determinantal arrangements of generic 2 x n matrices";

  // Kept alive for the interpreter's lifetime; the translator needs it.
  static PyObject* not_chordal =
      py::exception<NotChordalError>(m, "NotChordalError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotChordalError& e) {
      py::object err = py::reinterpret_borrow<py::object>(not_chordal)(e.what());
      err.attr("witness") = e.witness();
      PyErr_SetObject(not_chordal, err.ptr());
    }
  });
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GraphFormatError>(m, "GraphFormatError", PyExc_ValueError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, int n) { return parse_polynomial(text, n); }), py::arg("text"),
           py::arg("n"))
      .def_property_readonly("ambient", &Polynomial::ambient)
      .def_property_readonly("degree", &Polynomial::degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("__len__", &Polynomial::term_count)
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; })
      .def(py::self == py::self)
      .def("__hash__", [](const Polynomial& p) { return std::hash<std::string>{}(p.to_string()); })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__pow__", [](const Polynomial& a, int e) { return a.pow(e); })
      .def(
          "eval",
          [](const Polynomial& p, const py::dict& values) {
            Point pt;
            for (auto [k, v] : values) pt.set(parse_var(py::str(k)), from_py(v));
            return to_py(eval(p, pt));
          },
          py::arg("values"), "Evaluate at {'x1': 3, 'y1': -2, ...}")
      .def("derivative", [](const Polynomial& p, const std::string& var) { return partial_derivative(p, parse_var(var)); });

  m.def("exact_div", &exact_div, py::arg("p"), py::arg("d"), "Quotient p / d, or None when d does not divide p");
  m.def("minor", &minor, py::arg("i"), py::arg("j"), py::arg("n"));
  m.def("plucker_residual", &plucker_residual);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("complete", &Graph::complete)
      .def_static("cycle", &Graph::cycle)
      .def_static("path", &Graph::path)
      .def_static("parse", &parse_graph, py::arg("text"))
      .def_static("load", &load_graph_file, py::arg("path"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("components", &Graph::components)
      .def("disjoint_union", &Graph::disjoint_union)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.vertex_count()) + ", " + std::to_string(g.edge_count()) + " edges)";
      });

  m.def("is_chordal", [](const Graph& g) {
    const ChordalityVerdict v = is_chordal(g);
    py::dict d;
    d["chordal"] = v.chordal();
    d["order"] = v.order ? py::object(py::cast(v.order->order)) : py::none();
    d["witness"] = v.witness;
    return d;
  });
  m.def("longest_chordless_cycle", [](const Graph& g, int limit) { return longest_chordless_cycle(g, limit); },
        py::arg("g"), py::arg("max_vertices") = kDefaultCycleSearchLimit);
  m.def("pdim_lower_bound", [](const Graph& g, int limit) { return pdim_lower_bound(g, limit); }, py::arg("g"),
        py::arg("max_vertices") = kDefaultCycleSearchLimit);
  m.def("chordal_build_order", [](const Graph& g) {
    const BuildOrder b = chordal_build_order(g);
    return py::make_tuple(b.order, b.earlier_degree);
  });
  m.def("defining_poly", [](const Graph& g) { return Arrangement(g).defining_poly(); });

  py::class_<Derivation>(m, "Derivation")
      .def(py::init([](const std::string& text, int n) { return parse_derivation(text, n); }), py::arg("text"),
           py::arg("n"))
      .def_property_readonly("ambient", &Derivation::ambient)
      .def_property_readonly("degree", &Derivation::degree)
      .def("coeff", [](const Derivation& d, const std::string& var) { return d.coeff(parse_var(var)); })
      .def("__call__", [](const Derivation& d, const Polynomial& p) { return apply(d, p); })
      .def("__str__", &Derivation::to_string)
      .def(py::self == py::self);

  m.def("apply", &apply, py::arg("d"), py::arg("p"));
  m.def("is_logarithmic", &is_logarithmic, py::arg("d"), py::arg("f"));
  m.def("membership", [](const Derivation& d, const Graph& g) {
    py::list out;
    for (const auto& e : is_logarithmic_componentwise(d, Arrangement(g))) {
      out.append(py::make_tuple(e.edge, e.quotient ? py::object(py::cast(*e.quotient)) : py::none()));
    }
    return out;
  }, "Per-edge (edge, quotient or None)");
  m.def("a_coeff", &a_coeff, py::arg("m"), py::arg("k"), py::arg("n"));
  m.def("std_basis", &std_basis, py::arg("n"));
  m.def("std_basis_names", &std_basis_names, py::arg("n"));

  m.def(
      "saito_check",
      [](const std::vector<Derivation>& ds, const Polynomial& f, const std::string& mode, std::uint64_t seed,
         int points, int threads) {
        if (mode != "symbolic" && mode != "randomized") throw py::value_error("mode must be symbolic or randomized");
        RandomizedOptions opt;
        opt.seed = seed;
        opt.points = points;
        opt.threads = threads;
        SaitoReport r;
        {
          py::gil_scoped_release release;
          r = saito_check(ds, f, mode == "symbolic" ? SaitoMode::Symbolic : SaitoMode::Randomized, opt);
        }
        return saito_dict(r);
      },
      py::arg("derivations"), py::arg("f"), py::arg("mode") = "symbolic", py::arg("seed") = 0,
      py::arg("points") = 32, py::arg("threads") = 1);

  m.def("poincare_complete", [](int n) { return json_to_py(poincare_json(poincare_complete(n))); });
  m.def("poincare_chordal", [](const Graph& g) {
    const FactoredUniPoly p = poincare_chordal(g);
    py::dict d = json_to_py(poincare_json(p));
    d["text"] = p.to_string();
    return d;
  });
  m.def("homotopy_report", [](const Graph& g) {
    const HomotopyReport r = homotopy_report(g);
    py::dict d;
    d["pi1"] = r.pi1;
    d["pi2"] = r.pi2;
    d["pi_i_for_i_ge_3"] = r.pi_higher;
    return d;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& env_seed) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err, env_seed);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("env_seed") = "", "Run the command line in-process; returns (exit_code, stdout, stderr)");
}

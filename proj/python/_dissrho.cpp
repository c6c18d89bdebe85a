#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "dissrho/canonical.hpp"
#include "dissrho/cli.hpp"
#include "dissrho/dissociation.hpp"
#include "dissrho/enumeration.hpp"
#include "dissrho/extremal.hpp"
#include "dissrho/families.hpp"
#include "dissrho/graph6.hpp"
#include "dissrho/spectral.hpp"

namespace py = pybind11;
using namespace dissrho;

namespace {

EnumMode parse_mode(const std::string& mode) {
  if (mode == "connected") return EnumMode::kConnected;
  if (mode == "trees") return EnumMode::kTrees;
  if (mode == "all") return EnumMode::kAll;
  throw py::value_error("mode must be 'connected', 'trees' or 'all'");
}

std::vector<int> members(const VertexSet& s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_dissrho, m) {
  m.doc() = "Dissociation number and spectral radius of graphs";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int order, const std::vector<Edge>& edges) { return Graph::from_edges(order, edges); }),
           py::arg("order"), py::arg("edges") = std::vector<Edge>{})
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def_static("family", [](const std::string& spec) { return build(parse_family(spec)); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("degree", [](const Graph& g, int v) {
        if (v < 0 || v >= g.order()) throw py::index_error("vertex out of range");
        return g.degree(v);
      })
      .def("neighbors", [](const Graph& g, int v) {
        if (v < 0 || v >= g.order()) throw py::index_error("vertex out of range");
        return members(g.neighbors(v));
      })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("is_tree", [](const Graph& g) { return is_tree(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) { return "Graph(" + describe(g) + ")"; });

  m.def("canonical_form", [](const Graph& g) { return canonical_form(g).bytes; });
  m.def("is_isomorphic", &is_isomorphic);

  m.def(
      "diss",
      [](const Graph& g, const std::string& engine) {
        DissResult r;
        if (engine == "brute") {
          r = diss_bruteforce(g);
        } else if (engine == "tree") {
          r = diss_tree(g);
        } else if (engine == "bb" || engine == "auto") {
          r = engine == "auto" && is_tree(g) ? diss_tree(g) : diss_exact(g);
        } else {
          throw py::value_error("engine must be 'auto', 'bb', 'brute' or 'tree'");
        }
        return py::make_tuple(r.value, members(r.witness));
      },
      py::arg("graph"), py::arg("engine") = "auto");

  m.def(
      "spectral_radius",
      [](const Graph& g, double tol) {
        const SpectralResult r = spectral_radius(g, tol);
        py::dict d;
        d["rho"] = r.rho;
        d["perron"] = r.perron;
        d["iterations"] = r.iterations;
        d["residual"] = r.residual;
        return d;
      },
      py::arg("graph"), py::arg("tol") = kDefaultTol);

  m.def(
      "enumerate",
      [](int n, const std::string& mode, std::optional<int> k, int workers) {
        EnumStream s = enumerate(n, parse_mode(mode), EnumOptions{EnumStrategy::kOrderly, workers});
        if (k) s = filter_by_diss(s, *k, workers);
        std::vector<std::string> out;
        for (const auto& f : s.forms()) out.push_back(f.bytes);
        return out;
      },
      py::arg("n"), py::arg("mode") = "connected", py::arg("diss") = py::none(), py::arg("workers") = 1);

  m.def(
      "min_rho_search",
      [](int n, int k, bool trees, double tol, int workers) {
        SearchOptions o;
        o.tol = tol;
        o.workers = workers;
        o.timing = false;
        return to_json(min_rho_search(n, k, trees ? EnumMode::kTrees : EnumMode::kConnected, o));
      },
      py::arg("n"), py::arg("k"), py::arg("trees") = false, py::arg("tol") = kDefaultTol, py::arg("workers") = 1,
      "ExtremalReport as a JSON string.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, in, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "", "Runs the command-line tool in process: (exit code, stdout, stderr).");
}

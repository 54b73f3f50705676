#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dsrg/cayley.hpp"
#include "dsrg/closure.hpp"
#include "dsrg/equiv.hpp"
#include "dsrg/error.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/io.hpp"
#include "dsrg/params.hpp"
#include "dsrg/reproduce.hpp"
#include "dsrg/scheme.hpp"
#include "dsrg/search.hpp"

namespace py = pybind11;
using namespace dsrg;

namespace {

// Arcs come in and go out 1-based, matching the text formats.
Digraph digraph_from_arcs(std::size_t n, const std::vector<std::pair<Point, Point>>& arcs) {
  Digraph g(n);
  for (auto [u, v] : arcs) {
    if (u < 1 || v < 1 || u > n || v > n) throw InputError("arc endpoint outside 1..n");
    g.add_arc(u - 1, v - 1);
  }
  return g;
}

std::vector<std::pair<Point, Point>> arcs_one_based(const Digraph& g) {
  auto arcs = g.arcs();
  for (auto& [u, v] : arcs) {
    ++u;
    ++v;
  }
  return arcs;
}

PermGroup group_from_cycles(std::size_t degree, const std::vector<std::string>& generators) {
  std::vector<Permutation> gens;
  for (const auto& s : generators) gens.push_back(Permutation::from_cycles(s, degree));
  return PermGroup(degree, std::move(gens));
}

FiniteGroup named_group(const std::string& name) {
  if (name == "wreath-s2-z4") return wreath_s2_z4(WreathConvention::LeftActs);
  if (name == "wreath-s2-z4-opposite") return wreath_s2_z4(WreathConvention::RightActs);
  if (name == "meta39") return metacyclic_39();
  throw InputError("unknown group '" + name + "'");
}

py::object verdict_params(const Verdict& v) {
  if (!v) return py::none();
  return py::cast(*v.params);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Directed strongly regular graphs: feasibility, schemes, search, Cayley digraphs, equivalence";

  // Translators run most-recent first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<AxiomError>(m, "AxiomError", PyExc_ValueError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);

  py::class_<DsrgParams>(m, "Params")
      .def(py::init([](std::int64_t n, std::int64_t k, std::int64_t t, std::int64_t lam, std::int64_t mu) {
             return DsrgParams{n, k, t, lam, mu};
           }),
           py::arg("n"), py::arg("k"), py::arg("t"), py::arg("lam"), py::arg("mu"))
      .def_readonly("n", &DsrgParams::n)
      .def_readonly("k", &DsrgParams::k)
      .def_readonly("t", &DsrgParams::t)
      .def_readonly("lam", &DsrgParams::lambda)
      .def_readonly("mu", &DsrgParams::mu)
      .def("genuine", &DsrgParams::genuine)
      .def("as_tuple", [](const DsrgParams& p) { return py::make_tuple(p.n, p.k, p.t, p.lambda, p.mu); })
      .def("__eq__", [](const DsrgParams& a, const DsrgParams& b) { return a == b; })
      .def("__hash__", [](const DsrgParams& p) { return py::hash(py::make_tuple(p.n, p.k, p.t, p.lambda, p.mu)); })
      .def("__repr__", [](const DsrgParams& p) { return "Params(" + p.to_string() + ")"; });

  m.def("is_feasible", [](const DsrgParams& p) { return is_feasible(p).ok; });
  m.def("enumerate_feasible", &enumerate_feasible, py::arg("n"), py::arg("genuine_only") = true,
        py::arg("half_only") = false);
  m.def("complement_params", &complement_params);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&digraph_from_arcs), py::arg("n"), py::arg("arcs"), "Digraph on 1..n from 1-based arcs")
      .def_static("parse", [](const std::string& text) { return parse_digraph(text); })
      .def("format", [](const Digraph& g) { return format_digraph(g); })
      .def_property_readonly("order", &Digraph::order)
      .def("arcs", &arcs_one_based)
      .def("has_arc", [](const Digraph& g, Point u, Point v) {
        if (u < 1 || v < 1 || u > g.order() || v > g.order()) throw py::index_error("vertex outside 1..n");
        return g.has_arc(u - 1, v - 1);
      })
      .def("transposed", &Digraph::transposed)
      .def("complement", [](const Digraph& g) { return complement(g); })
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; });

  m.def("verify", [](const Digraph& g) { return verdict_params(verify(g)); },
        "Parameters if the digraph is a DSRG, else None");
  m.def("verify_reason", [](const Digraph& g) { return verify(g).reason; });

  m.def("cayley", [](const std::string& group, const std::vector<std::string>& labels) {
    const FiniteGroup G = named_group(group);
    return cayley_digraph(G, connection_set(G, labels));
  }, py::arg("group"), py::arg("labels"));
  m.def("group_ring_test", [](const std::string& group, const std::vector<std::string>& labels) {
    const FiniteGroup G = named_group(group);
    return verdict_params(group_ring_test(G, connection_set(G, labels)));
  }, py::arg("group"), py::arg("labels"));

  py::class_<CoherentConfig>(m, "Scheme")
      .def_static("parse", [](const std::string& text) { return parse_scheme(text); })
      .def("export", [](const CoherentConfig& c) { return export_scheme(c); })
      .def_property_readonly("order", &CoherentConfig::order)
      .def_property_readonly("rank", &CoherentConfig::rank)
      .def("homogeneous", &CoherentConfig::homogeneous)
      .def("commutative", [](const CoherentConfig& c) { return is_commutative(c); })
      .def("p", [](const CoherentConfig& c, std::size_t i, std::size_t j, std::size_t k) {
        if (i >= c.rank() || j >= c.rank() || k >= c.rank()) throw py::index_error("color out of range");
        return c.p(i, j, k);
      })
      .def("valency", [](const CoherentConfig& c, std::size_t i) {
        if (i >= c.rank()) throw py::index_error("color out of range");
        return c.valency(i);
      })
      .def("realize", [](const CoherentConfig& c, const ClassSet& classes) { return realize(c, classes); });

  m.def("schurian", [](std::size_t degree, const std::vector<std::string>& generators) {
    return schurian(group_from_cycles(degree, generators));
  }, py::arg("degree"), py::arg("generators"), "Scheme of 2-orbits; generators in 1-based cycle notation");
  m.def("appendix_scheme", [](const std::string& name) {
    return schurian(fixtures::make_group(fixtures::appendix_group(name)));
  });
  m.def("coherent_closure", [](const Digraph& g) { return coherent_closure(g); });

  m.def("search", [](const CoherentConfig& c, const std::vector<DsrgParams>& targets, std::size_t max_rank,
                     bool all_unions, std::size_t jobs) {
    SearchOptions opts;
    opts.targets = targets;
    opts.max_rank = max_rank;
    opts.all_unions = all_unions;
    opts.jobs = jobs;
    std::vector<std::pair<DsrgParams, ClassSet>> out;
    {
      py::gil_scoped_release release;
      for (auto& h : search_scheme(c, opts)) out.emplace_back(h.params, h.candidate.classes);
    }
    return out;
  }, py::arg("scheme"), py::arg("targets") = std::vector<DsrgParams>{}, py::arg("max_rank") = 25,
        py::arg("all_unions") = false, py::arg("jobs") = 1);

  m.def("aut_order", [](const Digraph& g) -> py::object {
    const auto order = canonical_form(g).aut_order();
    if (!order) return py::none();
    return py::int_(*order);
  });
  m.def("are_isomorphic", [](const Digraph& a, const Digraph& b) { return are_isomorphic(a, b); });
  m.def("equivalence_classes", [](const std::vector<Digraph>& gs) {
    py::gil_scoped_release release;
    return equivalence_classes(gs);
  });

  m.def("reproduce", [](const std::string& name) {
    CaseReport r;
    {
      py::gil_scoped_release release;
      r = reproduce_case(name);
    }
    py::list checks;
    for (const auto& c : r.checks)
      checks.append(py::dict(py::arg("label") = c.label, py::arg("expected") = c.expected,
                             py::arg("actual") = c.actual, py::arg("ok") = c.ok,
                             py::arg("informational") = c.informational));
    return py::dict(py::arg("name") = r.name, py::arg("passed") = r.passed(), py::arg("skipped") = r.skipped,
                    py::arg("checks") = checks);
  });
  m.def("case_names", &reproduce_case_names);
}

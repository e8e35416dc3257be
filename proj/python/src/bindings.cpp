#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphreal/constrained.hpp"
#include "graphreal/enumeration.hpp"
#include "graphreal/graphicality.hpp"
#include "graphreal/oracle.hpp"
#include "graphreal/sampling.hpp"

namespace py = pybind11;
using namespace graphreal;

namespace {

py::object to_python_int(const BigInt& value) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_python_int(boost::multiprecision::numerator(value)),
                  to_python_int(boost::multiprecision::denominator(value)));
}

DegreeSequence sorted_sequence(const std::vector<int>& degrees) { return DegreeSequence(degrees); }

NodeSelectionPolicy parse_policy(const std::string& name) {
  if (name == "max") return NodeSelectionPolicy::MaxResidual;
  if (name == "min") return NodeSelectionPolicy::MinResidual;
  if (name == "fixed") return NodeSelectionPolicy::FixedLabelOrder;
  throw py::value_error("policy must be 'max', 'min' or 'fixed'");
}

class GraphIterator {
 public:
  explicit GraphIterator(const std::vector<int>& degrees) : walker_(sorted_sequence(degrees)) {}

  LabeledGraph next() {
    auto g = walker_.next();
    if (!g) throw py::stop_iteration();
    return std::move(*g);
  }

 private:
  RealizationEnumerator walker_;
};

}  // namespace

PYBIND11_MODULE(_graphreal, m) {
  m.doc() = "Graphicality, exhaustive enumeration and sampling of degree sequence realizations";

  static py::exception<Error> error(m, "GraphrealError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<LabeledGraph>(m, "LabeledGraph")
      .def(py::init<std::size_t, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &LabeledGraph::node_count)
      .def_property_readonly("edges", &LabeledGraph::edges)
      .def("degrees", &LabeledGraph::degrees)
      .def("has_edge", &LabeledGraph::has_edge)
      .def("__eq__", [](const LabeledGraph& a, const LabeledGraph& b) { return a == b; })
      .def("__hash__", [](const LabeledGraph& g) {
        return py::hash(py::make_tuple(g.node_count(), py::tuple(py::cast(g.edges()))));
      })
      .def("__repr__", [](const LabeledGraph& g) {
        return "LabeledGraph(n=" + std::to_string(g.node_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def(
      "validate",
      [](const std::vector<long long>& raw) {
        auto v = validate_input_sequence(raw);
        return py::make_tuple(v.sequence.vector(), v.original_label);
      },
      py::arg("raw"), "Sort nonincreasing and strip zeros; returns (degrees, original labels).");

  m.def(
      "erdos_gallai",
      [](const std::vector<int>& d) {
        const auto r = erdos_gallai_test(sorted_sequence(d));
        py::dict out;
        out["graphical"] = r.graphical;
        out["parity_ok"] = r.parity_ok;
        out["first_violated_k"] = r.first_violated_k ? py::cast(*r.first_violated_k) : py::none();
        out["s_bound"] = r.s_bound;
        return out;
      },
      py::arg("degrees"));
  m.def("is_graphical", [](const std::vector<int>& d) { return is_graphical(d); }, py::arg("degrees"));
  m.def(
      "havel_hakimi_reduce", [](const std::vector<int>& d) { return havel_hakimi_reduce(sorted_sequence(d)).vector(); },
      py::arg("degrees"));
  m.def(
      "havel_hakimi_construct",
      [](const std::vector<int>& d, const std::string& policy) {
        return havel_hakimi_construct(sorted_sequence(d), parse_policy(policy));
      },
      py::arg("degrees"), py::arg("policy") = "max");

  m.def(
      "cg_test",
      [](const std::vector<int>& residual, NodeLabel i, std::vector<NodeLabel> forbidden) {
        return cg_test(std::span<const int>(residual), i, ForbiddenSet(i, std::move(forbidden)));
      },
      py::arg("residual"), py::arg("focal"), py::arg("forbidden"));
  m.def(
      "leftmost_restricted",
      [](const std::vector<int>& residual, NodeLabel i, std::vector<NodeLabel> forbidden) {
        return leftmost_restricted(std::span<const int>(residual), i, ForbiddenSet(i, std::move(forbidden)))
            .members();
      },
      py::arg("residual"), py::arg("focal"), py::arg("forbidden"));

  m.def(
      "rightmost_adjacency_set",
      [](const std::vector<int>& d) { return rightmost_adjacency_set(sorted_sequence(d)).members(); },
      py::arg("degrees"));
  m.def(
      "all_adjacency_sets",
      [](const std::vector<int>& d) {
        std::vector<std::vector<NodeLabel>> out;
        for (const auto& a : all_adjacency_sets(sorted_sequence(d))) out.push_back(a.members());
        return out;
      },
      py::arg("degrees"));

  py::class_<GraphIterator>(m, "GraphIterator")
      .def("__iter__", [](GraphIterator& it) -> GraphIterator& { return it; })
      .def("__next__", &GraphIterator::next);
  m.def(
      "enumerate_all", [](const std::vector<int>& d) { return GraphIterator(d); }, py::arg("degrees"),
      "Lazily iterate every labeled realization.");
  m.def(
      "count_realizations",
      [](const std::vector<int>& d, bool memoize, unsigned threads) {
        CountResult r;
        {
          py::gil_scoped_release release;
          r = count_realizations(sorted_sequence(d), memoize, threads);
        }
        return py::make_tuple(to_python_int(r.count), r.memo_entries);
      },
      py::arg("degrees"), py::arg("memoize") = true, py::arg("threads") = 1);

  m.def(
      "sample_weighted",
      [](const std::vector<int>& d, std::uint64_t seed, std::uint64_t stream) {
        const auto s = sample_weighted(sorted_sequence(d), seed, stream);
        return py::make_tuple(s.graph, to_fraction(s.probability), s.branch_sizes);
      },
      py::arg("degrees"), py::arg("seed"), py::arg("stream") = 0);
  m.def(
      "estimate_count",
      [](const std::vector<int>& d, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
        CountEstimate e;
        {
          py::gil_scoped_release release;
          e = estimate_count(sorted_sequence(d), samples, seed, threads);
        }
        return py::make_tuple(e.estimate, e.standard_error);
      },
      py::arg("degrees"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1);
  m.def(
      "molloy_reed_sample",
      [](const std::vector<int>& d, std::uint64_t seed, bool early_reject, std::uint64_t stream) {
        const auto s = molloy_reed_sample(sorted_sequence(d), seed, MrOptions{early_reject}, stream);
        py::dict stats;
        stats["restarts"] = s.stats.restarts;
        stats["self_loops"] = s.stats.self_loops;
        stats["multi_edges"] = s.stats.multi_edges;
        stats["cg_rejects"] = s.stats.cg_rejects;
        stats["stub_connections"] = s.stats.stub_connections;
        return py::make_tuple(s.graph, stats);
      },
      py::arg("degrees"), py::arg("seed"), py::arg("early_reject") = false, py::arg("stream") = 0);

  m.def(
      "oracle_enumerate",
      [](const std::vector<int>& degrees) { return oracle_enumerate(OracleQuery(degrees)); },
      py::arg("degrees"));
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "gqs/config.hpp"
#include "gqs/enumerate.hpp"
#include "gqs/errors.hpp"
#include "gqs/graph.hpp"
#include "gqs/graph6.hpp"
#include "gqs/hopf.hpp"
#include "gqs/invariants.hpp"
#include "gqs/serialize.hpp"
#include "gqs/series.hpp"

namespace py = pybind11;

namespace {

using gqs::CanonGraph;
using gqs::EdgeList;
using gqs::HopfElement;

// The Python layer works with plain edge lists; canonical forms cross the
// boundary as (edges, node_count) never as opaque handles.
CanonGraph to_graph(const EdgeList& edges) { return gqs::canonical(edges); }

std::vector<std::pair<EdgeList, std::string>> element_terms(
    const HopfElement& x) {
  std::vector<CanonGraph> keys;
  keys.reserve(x.term_count());
  for (const auto& [g, c] : x.terms()) keys.push_back(g);
  std::sort(keys.begin(), keys.end(), gqs::term_order_less);
  std::vector<std::pair<EdgeList, std::string>> out;
  out.reserve(keys.size());
  for (const CanonGraph& g : keys) {
    out.emplace_back(g.edges(), gqs::coeff_string(x.coefficient(g)));
  }
  return out;
}

std::vector<EdgeList> graph_list(const std::vector<CanonGraph>& gs) {
  std::vector<EdgeList> out;
  out.reserve(gs.size());
  for (const CanonGraph& g : gs) out.push_back(g.edges());
  return out;
}

}  // namespace

PYBIND11_MODULE(_gqs, m) {
  m.doc() = "exact subgraph-counting algebra on unlabeled graphs";

  // Most-derived first so capacity errors do not fall into the domain
  // handler.
  static py::exception<gqs::CapacityError> capacity_error(
      m, "CapacityError", PyExc_ValueError);
  py::register_exception<gqs::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<gqs::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gqs::CapacityError& e) {
      py::set_error(capacity_error, e.what());
    }
  });

  m.def(
      "canon",
      [](const EdgeList& edges) {
        const CanonGraph g = to_graph(edges);
        return std::make_pair(g.edges(), g.node_count());
      },
      py::arg("edges"),
      "canonical edge list and node count of the given graph");

  m.def(
      "to_graph6",
      [](const EdgeList& edges, int nodes) {
        return gqs::encode_graph6(to_graph(edges), nodes);
      },
      py::arg("edges"), py::arg("nodes") = -1);
  m.def(
      "from_graph6",
      [](const std::string& s) {
        const auto d = gqs::decode_graph6(s);
        return std::make_pair(d.graph.edges(), d.declared_nodes);
      },
      py::arg("text"));

  m.def(
      "evaluate",
      [](const EdgeList& pattern, const EdgeList& host) {
        return gqs::evaluate(to_graph(pattern), to_graph(host));
      },
      py::arg("pattern"), py::arg("host"),
      "number of subgraphs of host isomorphic to pattern");
  m.def(
      "evaluate_oracle",
      [](const EdgeList& pattern, const EdgeList& host) {
        return gqs::evaluate_oracle(to_graph(pattern), to_graph(host));
      },
      py::arg("pattern"), py::arg("host"),
      "same count by exhaustive edge-subset enumeration");

  m.def(
      "expand",
      [](const EdgeList& edges, int labels) {
        return gqs::expand(to_graph(edges), labels).monomials();
      },
      py::arg("edges"), py::arg("labels"),
      "all labeled copies inside the given label window");

  m.def(
      "product",
      [](const EdgeList& a, const EdgeList& b) {
        return element_terms(multiply(HopfElement::basis(to_graph(a)),
                                      HopfElement::basis(to_graph(b))));
      },
      py::arg("a"), py::arg("b"),
      "basis expansion of the product, as (edges, coefficient) pairs");
  m.def(
      "structure_constant",
      [](const EdgeList& a, const EdgeList& b, const EdgeList& g) {
        return gqs::structure_constant(to_graph(a), to_graph(b), to_graph(g));
      },
      py::arg("a"), py::arg("b"), py::arg("g"),
      "ordered pairs of copies of a and b covering all edges of g");
  m.def(
      "coproduct",
      [](const EdgeList& g) {
        const gqs::TensorElement t =
            gqs::coproduct(HopfElement::basis(to_graph(g)));
        std::vector<gqs::TensorElement::Key> keys;
        keys.reserve(t.term_count());
        for (const auto& [k, c] : t.terms()) keys.push_back(k);
        std::sort(keys.begin(), keys.end(),
                  [](const gqs::TensorElement::Key& a,
                     const gqs::TensorElement::Key& b) {
                    if (a.first != b.first)
                      return gqs::term_order_less(a.first, b.first);
                    return gqs::term_order_less(a.second, b.second);
                  });
        std::vector<std::pair<std::pair<EdgeList, EdgeList>, std::string>> out;
        out.reserve(keys.size());
        for (const auto& [l, r] : keys) {
          out.emplace_back(std::make_pair(l.edges(), r.edges()),
                           gqs::coeff_string(t.coefficient(l, r)));
        }
        return out;
      },
      py::arg("g"), "((left, right), coefficient) pairs of the coproduct");
  m.def(
      "antipode",
      [](const EdgeList& g) {
        return element_terms(gqs::antipode(HopfElement::basis(to_graph(g))));
      },
      py::arg("g"));
  m.def(
      "binomial_of_edge",
      [](int n) { return element_terms(gqs::binomial_of_edge(n)); },
      py::arg("n"), "sum of all n-edge basis graphs");

  m.def(
      "iso",
      [](const EdgeList& a, const EdgeList& b) {
        return gqs::iso_test(to_graph(a), to_graph(b));
      },
      py::arg("a"), py::arg("b"),
      "isomorphism via count-vector comparison");
  m.def(
      "separating_family",
      [](int n) { return graph_list(gqs::separating_family(n)); },
      py::arg("n"));
  m.def(
      "invariant_vector",
      [](const EdgeList& host, int n) {
        std::vector<std::pair<EdgeList, long long>> out;
        for (const auto& [pattern, value] :
             gqs::invariant_vector(to_graph(host), n).entries) {
          out.emplace_back(pattern.edges(), value);
        }
        return out;
      },
      py::arg("host"), py::arg("n"));

  m.def(
      "deck",
      [](const EdgeList& host) {
        const gqs::Deck d = gqs::deck(to_graph(host));
        return std::make_pair(d.card_nodes, graph_list(d.cards));
      },
      py::arg("host"), "(card_nodes, cards) of one-vertex deletions");
  m.def(
      "kelly",
      [](const EdgeList& pattern, const EdgeList& host) {
        const gqs::KellyReport r =
            gqs::kelly_check(to_graph(pattern), to_graph(host));
        return py::make_tuple(r.lhs, r.rhs, r.holds);
      },
      py::arg("pattern"), py::arg("host"),
      "(scaled host count, deck sum, equal)");

  m.def(
      "generate_by_edges",
      [](int m, bool connected) {
        auto gs = gqs::generate_by_edges(m);
        if (connected) gs = gqs::filter_connected(gs);
        return graph_list(gs);
      },
      py::arg("m"), py::arg("connected") = false);
  m.def(
      "generate_by_nodes",
      [](int n, bool connected) {
        auto gs = gqs::generate_by_nodes(n);
        if (connected) gs = gqs::filter_connected(gs);
        return graph_list(gs);
      },
      py::arg("n"), py::arg("connected") = false);
  m.def("euler_transform", &gqs::euler_transform, py::arg("c"),
        py::arg("upto"));

  m.def("elementary_eval", &gqs::elementary_eval, py::arg("v"), py::arg("k"),
        "elementary symmetric polynomial on a boolean vector");
  m.def("vandermonde_vanishes", &gqs::vandermonde_vanishes,
        py::arg("columns"), py::arg("v"),
        "whether the column difference products vanish on v");

  m.def(
      "set_limits",
      [](int max_nodes, int max_edges) {
        gqs::set_limits({max_nodes, max_edges});
      },
      py::arg("max_nodes"), py::arg("max_edges"));
  m.def("reset_limits", &gqs::reset_limits);
  m.def("get_limits", [] {
    const gqs::Limits l = gqs::limits();
    return std::make_pair(l.max_nodes, l.max_edges);
  });
}

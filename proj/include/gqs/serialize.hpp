#ifndef GQS_SERIALIZE_HPP
#define GQS_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "gqs/graph.hpp"
#include "gqs/hopf.hpp"
#include "gqs/invariants.hpp"
#include "gqs/series.hpp"

namespace gqs {

// Edge-list text: one edge per line, "i j" with i<j, 1-based.  Blank lines
// are ignored on input; any other malformed line raises ParseError with the
// 1-based line number in the message.
std::string edge_text(const EdgeList& edges);
EdgeList parse_edge_text(const std::string& text);

// Single-line rendering used for CSV column labels: "1 2;1 3".
std::string edge_label(const EdgeList& edges);

// "p" or "p/q", no decimals.  parse raises ParseError on anything else.
std::string coeff_string(const Rational& c);
Rational parse_coeff(const std::string& s);

// JSON shapes.  A graph is a list of [i, j] pairs; an element is a list of
// {"graph": ..., "coeff": "p/q"} objects in display order; a tensor term
// adds "left"/"right" graphs; a series is a sorted list of monomial edge
// lists.  from_json inverses are lossless.
nlohmann::ordered_json graph_json(const CanonGraph& g);
nlohmann::ordered_json element_json(const HopfElement& x);
nlohmann::ordered_json tensor_json(const TensorElement& x);
nlohmann::ordered_json series_json(const TruncatedSeries& s);
HopfElement element_from_json(const nlohmann::json& j);

// CSV for invariant vectors: header "host,<edge labels...>", then one row
// per host keyed by its graph6 string.  All rows must share the same n.
std::string invariant_csv(const std::vector<std::string>& host_names,
                          const std::vector<InvariantVector>& rows);

}  // namespace gqs

#endif

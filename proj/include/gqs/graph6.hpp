#ifndef GQS_GRAPH6_HPP
#define GQS_GRAPH6_HPP

#include <string>

#include "gqs/graph.hpp"

namespace gqs {

// Result of decoding: the canonical form of the encoded graph plus the node
// count the string declared, which may exceed the canonical node count when
// the encoded graph had isolated vertices.
struct DecodedGraph {
  CanonGraph graph;
  int declared_nodes = 0;
};

// Decodes a graph6 string (short form, up to 62 nodes).  Throws ParseError
// with the byte offset of the first bad character, including trailing
// padding bits that are not zero or a truncated body.
DecodedGraph decode_graph6(const std::string& s);

// Encodes the canonical labeling of g on declared_nodes vertices
// (declared_nodes == -1 means exactly g.node_count()).  Extra vertices
// beyond the support are emitted as isolated.  declared_nodes must be at
// least g.node_count() and at most 62.
std::string encode_graph6(const CanonGraph& g, int declared_nodes = -1);

}  // namespace gqs

#endif

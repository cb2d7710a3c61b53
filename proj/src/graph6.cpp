#include "gqs/graph6.hpp"

#include <string>

#include "gqs/errors.hpp"

namespace gqs {

// graph6 short form: one byte 63+n for the node count, then the upper
// triangle of the adjacency matrix in column order x(1,2), x(1,3), x(2,3),
// x(1,4), ..., packed into 6-bit groups (high bit first), each stored as
// group+63; the final group is zero-padded.

DecodedGraph decode_graph6(const std::string& s) {
  if (s.empty()) throw ParseError("empty graph6 string", 0);
  const int n = static_cast<int>(static_cast<unsigned char>(s[0])) - 63;
  if (n < 0 || n > 62) {
    throw ParseError("graph6 node count byte out of range", 0);
  }
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() < 1 + body) {
    throw ParseError("graph6 string shorter than its node count requires",
                     s.size());
  }
  if (s.size() > 1 + body) {
    throw ParseError("trailing bytes after graph6 body", 1 + body);
  }
  EdgeList edges;
  long long bit = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i, ++bit) {
      const std::size_t at = 1 + static_cast<std::size_t>(bit / 6);
      const int c = static_cast<int>(static_cast<unsigned char>(s[at])) - 63;
      if (c < 0 || c > 63) throw ParseError("graph6 byte out of range", at);
      if (c >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
    }
  }
  // Validate remaining bytes and padding even when n < 2.
  for (std::size_t at = 1; at < s.size(); ++at) {
    const int c = static_cast<int>(static_cast<unsigned char>(s[at])) - 63;
    if (c < 0 || c > 63) throw ParseError("graph6 byte out of range", at);
  }
  if (bits % 6 != 0 && body > 0) {
    const std::size_t at = s.size() - 1;
    const int c = static_cast<int>(static_cast<unsigned char>(s[at])) - 63;
    if (c & ((1 << (6 - bits % 6)) - 1)) {
      throw ParseError("graph6 padding bits must be zero", at);
    }
  }
  return DecodedGraph{canonical(edges), n};
}

std::string encode_graph6(const CanonGraph& g, int declared_nodes) {
  const int n = declared_nodes == -1 ? g.node_count() : declared_nodes;
  if (n < g.node_count()) {
    throw DomainError("declared node count below the graph's node count");
  }
  if (n > 62) throw CapacityError("graph6 encoding supports at most 62 nodes");
  std::string out(1, static_cast<char>(63 + n));
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  out.resize(1 + static_cast<std::size_t>((bits + 5) / 6), 0);
  long long bit = 0;
  // Walk the column order; g's edges are sorted in row order, so membership
  // is tested against an adjacency table built once.
  std::vector<std::vector<char>> adj(
      static_cast<std::size_t>(n) + 1,
      std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  for (const auto& [a, b] : g.edges()) {
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
  }
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i, ++bit) {
      if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        out[1 + static_cast<std::size_t>(bit / 6)] |=
            static_cast<char>(1 << (5 - bit % 6));
      }
    }
  }
  for (std::size_t at = 1; at < out.size(); ++at) {
    out[at] = static_cast<char>(out[at] + 63);
  }
  return out;
}

}  // namespace gqs

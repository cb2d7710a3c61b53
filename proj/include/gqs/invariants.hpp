#ifndef GQS_INVARIANTS_HPP
#define GQS_INVARIANTS_HPP

#include <utility>
#include <vector>

#include "gqs/graph.hpp"

namespace gqs {

// Counts of every separating-family pattern inside one host, for hosts
// meant to live on n nodes.
struct InvariantVector {
  int n = 0;
  std::vector<std::pair<CanonGraph, long long>> entries;

  friend bool operator==(const InvariantVector&, const InvariantVector&) =
      default;
};

// One-vertex-deleted subgraphs of a host.  Cards drop isolated vertices in
// their canonical form; their nominal size is card_nodes.
struct Deck {
  int card_nodes = 0;
  std::vector<CanonGraph> cards;  // sorted multiset, one per deleted vertex

  friend bool operator==(const Deck&, const Deck&) = default;
};

struct KellyReport {
  long long lhs = 0;  // (n - r) * count of the pattern in the host
  long long rhs = 0;  // sum of pattern counts over the deck
  bool holds = false;

  friend bool operator==(const KellyReport&, const KellyReport&) = default;
};

// All connected canonical graphs with at most n nodes and between 1 and
// floor(C(n,2)/2) edges, sorted by (edge count, node count, edges).
// Counts of these inside two hosts on at most n nodes agree exactly when
// the hosts are isomorphic.  n < 2 is a domain error; n beyond the node
// limit (or an edge budget beyond the edge limit) is a capacity error.
std::vector<CanonGraph> separating_family(int n);

// Counts of every separating_family(n) pattern inside host.
InvariantVector invariant_vector(const CanonGraph& host, int n);

// Whether the hosts have equal invariant vectors on max(3, node counts)
// nodes; agrees with canonical-form equality.  The floor of 3 keeps the
// family nonempty so two-node hosts are still separated.
bool iso_test(const CanonGraph& h1, const CanonGraph& h2);

// The n one-vertex-deleted cards of a host on n >= 3 nodes.
Deck deck(const CanonGraph& host);

// Kelly's identity (n - r) * count(g in host) = sum of count(g in card)
// over the deck, for a pattern on r < n nodes.
KellyReport kelly_check(const CanonGraph& g, const CanonGraph& host);

// k-th elementary symmetric polynomial at a 0/1 vector; always equals
// C(number of ones, k).
long long elementary_eval(const std::vector<int>& v, int k);

// Whether the product of per-column Vandermonde factors vanishes at a 0/1
// vector; guaranteed true when some column has three or more positions.
// Positions are 1-based into v.
bool vandermonde_vanishes(const std::vector<std::vector<int>>& columns,
                          const std::vector<int>& v);

}  // namespace gqs

#endif

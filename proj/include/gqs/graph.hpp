#ifndef GQS_GRAPH_HPP
#define GQS_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace gqs {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

// Bijection of the label set {1..n}.
class Permutation {
 public:
  // images[i-1] is the image of label i; must be a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(img_.size()); }
  int operator()(int label) const;  // DomainError outside 1..size()
  Permutation inverse() const;
  // Composition in application order: (a.then(b))(i) == b(a(i)).
  Permutation then(const Permutation& next) const;
  const std::vector<int>& images() const noexcept { return img_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

// Finite simple graph given by its edge list.  Labels are positive integers;
// vertices exist only as edge endpoints, so isolated vertices are not
// representable.  Edges are kept normalized: each stored as (i,j) with i<j,
// sorted ascending, no duplicates, no loops.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(EdgeList edges);

  const EdgeList& edges() const noexcept { return edges_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  bool is_empty() const noexcept { return edges_.empty(); }
  std::vector<int> support() const;  // sorted distinct labels
  int max_label() const noexcept;

  friend auto operator<=>(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  EdgeList edges_;
};

// A graph in canonical form: labels are exactly 1..node_count() and the
// sorted edge sequence is the lexicographically least over all relabelings.
// Two graphs are isomorphic iff their canonical forms compare equal.
// Instances are only produced by the canonicalization routines, so the
// invariant always holds.
class CanonGraph {
 public:
  CanonGraph() = default;  // the empty graph

  const EdgeList& edges() const noexcept { return edges_; }
  int node_count() const noexcept { return nodes_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  bool is_empty() const noexcept { return edges_.empty(); }

  friend auto operator<=>(const CanonGraph&, const CanonGraph&) = default;

 private:
  friend CanonGraph canonical(const LabeledGraph&);
  friend CanonGraph canonical_exhaustive(const LabeledGraph&);
  CanonGraph(EdgeList edges, int nodes)
      : edges_(std::move(edges)), nodes_(nodes) {}

  EdgeList edges_;
  int nodes_ = 0;
};

struct CanonGraphHash {
  std::size_t operator()(const CanonGraph& g) const noexcept;
};

// Applies sigma to every endpoint.  Requires max_label(g) <= sigma.size().
LabeledGraph relabel(const LabeledGraph& g, const Permutation& sigma);

// Order-preserving relabeling of the support onto {1..k}.
LabeledGraph pack(const LabeledGraph& g);

// Canonical form: pack, split into connected components, run a bounded
// best-first search per component, reassemble components in canonical order.
// Components larger than limits().max_nodes raise CapacityError.
CanonGraph canonical(const LabeledGraph& g);
CanonGraph canonical(const EdgeList& edges);

// Reference implementation: packs, then scans all k! relabelings of the
// whole graph without pruning and keeps the least edge sequence.  Supports
// at most 9 labels.  Exists so the pruned search can be checked against it.
CanonGraph canonical_exhaustive(const LabeledGraph& g);

// All distinct relabelings of g on its own label set {1..node_count()}.
// Supports at most 10 nodes.
std::vector<LabeledGraph> orbit(const CanonGraph& g);

// node_count()! / automorphism_count(): the number of distinct labeled
// copies of g on a fixed label set of size node_count().
long long orbit_size(const CanonGraph& g);

// Number of relabelings fixing g.  Computed per component: the counts of the
// distinct components multiply, and equal components may also be swapped.
long long automorphism_count(const CanonGraph& g);

// Connected components in the order they appear in the canonical form.
std::vector<CanonGraph> components(const CanonGraph& g);
int component_count(const CanonGraph& g);
// True when there is at most one component; the empty graph counts as
// connected.
bool is_connected(const CanonGraph& g);

CanonGraph disjoint_union(const CanonGraph& a, const CanonGraph& b);

// Display and serialization order for basis graphs: fewer edges first, then
// fewer nodes, then lexicographic on the canonical edge sequence.
bool term_order_less(const CanonGraph& a, const CanonGraph& b);

// Table order for host/pattern listings: fewer nodes first, then fewer
// edges, then edge sequences compared colexicographically (an edge (i,j)
// precedes (k,l) when j<l, or j==l and i<k).
bool matrix_order_less(const CanonGraph& a, const CanonGraph& b);

// Exact small-number helpers; DomainError on overflow or bad arguments.
long long factorial(int n);          // n <= 20
long long binomial(int n, int k);    // result must fit in long long

}  // namespace gqs

#endif

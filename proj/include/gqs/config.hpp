#ifndef GQS_CONFIG_HPP
#define GQS_CONFIG_HPP

namespace gqs {

// Size bounds guarding the factorial and exponential cores.
//
// max_nodes bounds the label spaces that are searched exhaustively: the size
// of any connected component handed to the canonical-form search, and the
// label count of a truncated expansion (hence also the node total of a
// product, which expands at n1+n2 labels).  Disjoint unions as such are not
// bounded by it; their components are.
//
// max_edges bounds edge-indexed generation.
struct Limits {
  int max_nodes = 10;
  int max_edges = 8;
};

// Current process-wide bounds.
const Limits& limits();

// Validates and installs new bounds (max_nodes in [1,20], max_edges in
// [0,12]; throws DomainError otherwise).  Intended to be called before
// starting computations, not concurrently with them.
void set_limits(const Limits& l);

// Restores the defaults.
void reset_limits();

}  // namespace gqs

#endif

#ifndef GQS_ENUMERATE_HPP
#define GQS_ENUMERATE_HPP

#include <vector>

#include "gqs/graph.hpp"

namespace gqs {

// All canonical graphs with exactly m edges (and so no isolated vertex),
// sorted by term order.  m above limits().max_edges raises CapacityError.
std::vector<CanonGraph> generate_by_edges(int m);

// All canonical graphs with at most n nodes, sorted by term order.  Their
// number equals the number of graphs on exactly n nodes when isolated
// vertices are allowed.  Capped at min(7, limits().max_nodes).
std::vector<CanonGraph> generate_by_nodes(int n);

// Members with at most one component (the empty graph counts as connected).
std::vector<CanonGraph> filter_connected(const std::vector<CanonGraph>& gs);

// Coefficients 0..upto of the product over n >= 1 of (1 - q^n) to the
// power -c[n]: the series counting multisets of connected objects.  c[0]
// is ignored; c must reach index upto.
std::vector<long long> euler_transform(const std::vector<long long>& c,
                                       int upto);

}  // namespace gqs

#endif

#include "gqs/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "gqs/config.hpp"
#include "gqs/errors.hpp"

namespace gqs {

namespace {

// Children of parent under orderly generation: add one edge between
// existing nodes, to one fresh node, or as a fresh disjoint edge; keep a
// canonical child only if deleting the last edge of its canonical form
// leads back to parent.  Every graph then descends from the empty graph
// along exactly one chain, so no global seen-set is needed.
std::vector<CanonGraph> children_of(const CanonGraph& parent, int node_cap) {
  const int k = parent.node_count();
  EdgeList candidates;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) candidates.emplace_back(i, j);
  }
  if (k + 1 <= node_cap) {
    for (int i = 1; i <= k; ++i) candidates.emplace_back(i, k + 1);
  }
  if (k + 2 <= node_cap) candidates.emplace_back(k + 1, k + 2);

  const EdgeList& base = parent.edges();
  std::set<CanonGraph> out;
  for (const Edge& e : candidates) {
    if (std::binary_search(base.begin(), base.end(), e)) continue;
    EdgeList extended = base;
    extended.push_back(e);
    const CanonGraph child = canonical(extended);
    EdgeList trimmed = child.edges();
    trimmed.pop_back();
    if (canonical(trimmed) == parent) out.insert(child);
  }
  return {out.begin(), out.end()};
}

std::vector<CanonGraph> level_sorted(std::vector<CanonGraph> level) {
  std::sort(level.begin(), level.end(), term_order_less);
  return level;
}

// Levels 0..m of the orderly generation tree, optionally node-capped.
std::vector<std::vector<CanonGraph>> generate_levels(int m, int node_cap) {
  std::vector<std::vector<CanonGraph>> levels;
  levels.push_back({CanonGraph()});
  for (int depth = 1; depth <= m; ++depth) {
    std::vector<CanonGraph> next;
    for (const CanonGraph& parent : levels.back()) {
      for (const CanonGraph& child : children_of(parent, node_cap)) {
        next.push_back(child);
      }
    }
    levels.push_back(level_sorted(std::move(next)));
  }
  return levels;
}

}  // namespace

std::vector<CanonGraph> generate_by_edges(int m) {
  if (m < 0) throw DomainError("edge count must be nonnegative");
  if (m > limits().max_edges) {
    throw CapacityError("generation at " + std::to_string(m) +
                        " edges exceeds the edge limit of " +
                        std::to_string(limits().max_edges));
  }
  // A connected graph with m edges has at most m+1 nodes, so no component
  // cap below that can be hit; the total label window is 2m for m disjoint
  // edges.
  return generate_levels(m, std::max(2 * m, 1)).back();
}

std::vector<CanonGraph> generate_by_nodes(int n) {
  if (n < 0) throw DomainError("node count must be nonnegative");
  const int cap = std::min(7, limits().max_nodes);
  if (n > cap) {
    throw CapacityError("generation at " + std::to_string(n) +
                        " nodes exceeds the limit of " + std::to_string(cap));
  }
  const int max_edges = n * (n - 1) / 2;
  std::vector<CanonGraph> out;
  for (auto& level : generate_levels(max_edges, n)) {
    out.insert(out.end(), level.begin(), level.end());
  }
  std::sort(out.begin(), out.end(), term_order_less);
  return out;
}

std::vector<CanonGraph> filter_connected(const std::vector<CanonGraph>& gs) {
  std::vector<CanonGraph> out;
  for (const CanonGraph& g : gs) {
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

std::vector<long long> euler_transform(const std::vector<long long>& c,
                                       int upto) {
  if (upto < 0) throw DomainError("series cutoff must be nonnegative");
  if (static_cast<int>(c.size()) <= upto) {
    throw DomainError("input series is shorter than the requested cutoff");
  }
  std::vector<long long> out(static_cast<std::size_t>(upto) + 1, 0);
  out[0] = 1;
  for (int n = 1; n <= upto; ++n) {
    if (c[static_cast<std::size_t>(n)] < 0 ||
        c[static_cast<std::size_t>(n)] > 1000000000) {
      throw DomainError("series coefficient out of range");
    }
    if (c[static_cast<std::size_t>(n)] == 0) continue;
    // Multiply by (1 - q^n)^(-c[n]) = sum_j C(c[n]+j-1, j) q^(nj).
    std::vector<long long> next(out.size(), 0);
    for (int j = 0; n * j <= upto; ++j) {
      const long long weight = binomial(static_cast<int>(c[n]) + j - 1, j);
      for (int d = 0; d + n * j <= upto; ++d) {
        next[static_cast<std::size_t>(d + n * j)] +=
            weight * out[static_cast<std::size_t>(d)];
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace gqs

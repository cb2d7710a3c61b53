#include "gqs/invariants.hpp"

#include <algorithm>
#include <string>

#include "gqs/config.hpp"
#include "gqs/enumerate.hpp"
#include "gqs/errors.hpp"
#include "gqs/series.hpp"

namespace gqs {

std::vector<CanonGraph> separating_family(int n) {
  if (n < 2) throw DomainError("separating family needs at least two nodes");
  if (n > limits().max_nodes) {
    throw CapacityError("separating family at " + std::to_string(n) +
                        " nodes exceeds the node limit of " +
                        std::to_string(limits().max_nodes));
  }
  const int edge_budget = n * (n - 1) / 2 / 2;
  std::vector<CanonGraph> family;
  for (int m = 1; m <= edge_budget; ++m) {
    for (const CanonGraph& g : filter_connected(generate_by_edges(m))) {
      if (g.node_count() <= n) family.push_back(g);
    }
  }
  return family;
}

InvariantVector invariant_vector(const CanonGraph& host, int n) {
  if (host.node_count() > n) {
    throw DomainError("host has more nodes than the family accounts for");
  }
  InvariantVector out;
  out.n = n;
  for (const CanonGraph& pattern : separating_family(n)) {
    out.entries.emplace_back(pattern, evaluate(pattern, host));
  }
  return out;
}

bool iso_test(const CanonGraph& h1, const CanonGraph& h2) {
  const int n = std::max({3, h1.node_count(), h2.node_count()});
  return invariant_vector(h1, n) == invariant_vector(h2, n);
}

Deck deck(const CanonGraph& host) {
  const int n = host.node_count();
  if (n < 3) throw DomainError("deck needs a host with at least three nodes");
  Deck out;
  out.card_nodes = n - 1;
  for (int v = 1; v <= n; ++v) {
    EdgeList kept;
    for (const Edge& e : host.edges()) {
      if (e.first != v && e.second != v) kept.push_back(e);
    }
    out.cards.push_back(canonical(kept));
  }
  std::sort(out.cards.begin(), out.cards.end());
  return out;
}

KellyReport kelly_check(const CanonGraph& g, const CanonGraph& host) {
  const int r = g.node_count();
  const int n = host.node_count();
  if (r >= n) {
    throw DomainError("the pattern must have fewer nodes than the host");
  }
  KellyReport report;
  report.lhs = (n - r) * evaluate(g, host);
  report.rhs = 0;
  for (const CanonGraph& card : deck(host).cards) {
    report.rhs += evaluate(g, card);
  }
  report.holds = report.lhs == report.rhs;
  return report;
}

namespace {

void check_boolean(const std::vector<int>& v) {
  for (const int b : v) {
    if (b != 0 && b != 1) throw DomainError("vector entries must be 0 or 1");
  }
}

}  // namespace

long long elementary_eval(const std::vector<int>& v, int k) {
  if (k < 0) throw DomainError("elementary index must be nonnegative");
  check_boolean(v);
  if (k > static_cast<int>(v.size())) return 0;
  // dp[j] = e_j of the prefix processed so far.
  std::vector<long long> dp(static_cast<std::size_t>(k) + 1, 0);
  dp[0] = 1;
  for (const int b : v) {
    for (int j = k; j >= 1; --j) {
      dp[static_cast<std::size_t>(j)] +=
          b * dp[static_cast<std::size_t>(j - 1)];
    }
  }
  return dp[static_cast<std::size_t>(k)];
}

bool vandermonde_vanishes(const std::vector<std::vector<int>>& columns,
                          const std::vector<int>& v) {
  check_boolean(v);
  const int len = static_cast<int>(v.size());
  long long product = 1;
  for (const std::vector<int>& column : columns) {
    for (const int p : column) {
      if (p < 1 || p > len) {
        throw DomainError("column position " + std::to_string(p) +
                          " is outside the vector");
      }
    }
    for (std::size_t i = 0; i < column.size(); ++i) {
      for (std::size_t j = i + 1; j < column.size(); ++j) {
        product *= v[static_cast<std::size_t>(column[i] - 1)] -
                   v[static_cast<std::size_t>(column[j] - 1)];
      }
    }
  }
  return product == 0;
}

}  // namespace gqs

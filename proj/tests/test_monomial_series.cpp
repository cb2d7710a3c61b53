#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gqs/config.hpp"
#include "gqs/errors.hpp"
#include "gqs/graph.hpp"
#include "gqs/series.hpp"

namespace {

using gqs::CanonGraph;
using gqs::EdgeList;
using gqs::LabeledGraph;

CanonGraph canon(const EdgeList& e) { return gqs::canonical(e); }

// Five-node demonstration host used throughout: triangle 1-2-3 plus edges
// 1-4, 2-4, 1-5, 3-5.
CanonGraph demo_host() {
  return canon({{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 5}, {3, 5}});
}

std::vector<CanonGraph> all_graphs_up_to_5_nodes() {
  std::vector<gqs::Edge> pairs;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) pairs.emplace_back(i, j);
  }
  std::set<CanonGraph> classes;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    EdgeList e;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1u) e.push_back(pairs[i]);
    }
    classes.insert(canon(e));
  }
  return {classes.begin(), classes.end()};
}

}  // namespace

TEST_CASE("expansion lists every labeled copy exactly once") {
  const CanonGraph k2 = canon({{1, 2}});
  const auto s = gqs::expand(k2, 3);
  CHECK(s.label_limit() == 3);
  CHECK(s.monomials() == std::vector<EdgeList>{{{1, 2}}, {{1, 3}}, {{2, 3}}});

  const CanonGraph k3 = canon({{1, 2}, {1, 3}, {2, 3}});
  CHECK(gqs::expand(k3, 4).size() == 4);  // one triangle per 3-subset
  CHECK(gqs::expand(k3, 2).size() == 0);  // truncated away
  CHECK(gqs::expand(CanonGraph(), 4).size() == 1);  // the constant monomial

  const CanonGraph p3 = canon({{1, 2}, {1, 3}});
  CHECK(gqs::expand(p3, 4).size() == 12);  // C(4,3) * 3 placements
}

TEST_CASE("expansion size is the binomial times the orbit size") {
  for (const CanonGraph& g : all_graphs_up_to_5_nodes()) {
    for (int labels = g.node_count(); labels <= 7; ++labels) {
      CHECK(static_cast<long long>(gqs::expand(g, labels).size()) ==
            gqs::binomial(labels, g.node_count()) * gqs::orbit_size(g));
    }
  }
}

TEST_CASE("expansions are truncation-stable") {
  const CanonGraph m2 = canon({{1, 2}, {3, 4}});
  const auto big = gqs::expand(m2, 6);
  const auto small = gqs::expand(m2, 5);
  std::vector<EdgeList> filtered;
  for (const EdgeList& m : big.monomials()) {
    bool fits = true;
    for (const auto& [a, b] : m) fits = fits && b <= 5;
    if (fits) filtered.push_back(m);
  }
  CHECK(filtered == small.monomials());
}

TEST_CASE("expansion respects the configured label limit") {
  const CanonGraph k2 = canon({{1, 2}});
  CHECK_THROWS_AS(gqs::expand(k2, 11), gqs::CapacityError);
  gqs::set_limits({12, 8});
  CHECK(gqs::expand(k2, 11).size() == 55);
  gqs::reset_limits();
  CHECK_THROWS_AS(gqs::expand(k2, -1), gqs::DomainError);
}

TEST_CASE("counting on the five-node demonstration host") {
  const CanonGraph h = demo_host();
  CHECK(h.node_count() == 5);
  CHECK(h.edge_count() == 7);

  const CanonGraph k2 = canon({{1, 2}});
  const CanonGraph p3 = canon({{1, 2}, {1, 3}});
  const CanonGraph k3 = canon({{1, 2}, {1, 3}, {2, 3}});
  const CanonGraph star = canon({{1, 2}, {1, 3}, {1, 4}});
  const CanonGraph m2 = canon({{1, 2}, {3, 4}});

  CHECK(gqs::evaluate(k3, h) == 3);
  CHECK(gqs::evaluate(k2, h) == 7);
  CHECK(gqs::evaluate(p3, h) == 14);
  CHECK(gqs::evaluate(star, h) == 6);
  CHECK(gqs::evaluate(m2, h) == 7);

  for (const CanonGraph& g : {k2, p3, k3, star, m2}) {
    CHECK(gqs::evaluate_oracle(g, h) == gqs::evaluate(g, h));
  }
}

TEST_CASE("a graph counts itself once and unrelated graphs zero times") {
  for (const CanonGraph& g : all_graphs_up_to_5_nodes()) {
    if (g.is_empty()) continue;
    CHECK(gqs::evaluate(g, g) == 1);
  }
  const CanonGraph c4 = canon({{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  const CanonGraph k3 = canon({{1, 2}, {1, 3}, {2, 3}});
  CHECK(gqs::evaluate(k3, c4) == 0);
  CHECK(gqs::evaluate(c4, k3) == 0);
  CHECK(gqs::evaluate(CanonGraph(), c4) == 1);
}

TEST_CASE("evaluation is invariant under relabeling the host") {
  std::mt19937 rng(5u);
  const CanonGraph h = demo_host();
  const CanonGraph p4 = canon({{1, 2}, {1, 3}, {2, 4}});
  const long long reference = gqs::evaluate(p4, h);
  for (int r = 0; r < 25; ++r) {
    std::vector<int> img(5);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    const CanonGraph shuffled = gqs::canonical(
        relabel(LabeledGraph(h.edges()), gqs::Permutation(img)));
    CHECK(shuffled == h);
    CHECK(gqs::evaluate(p4, shuffled) == reference);
  }
}

TEST_CASE("backtracking count agrees with the subset oracle everywhere small") {
  // Every pattern with at most 3 edges against every host on at most 5
  // nodes, both routes bit-equal.
  std::vector<CanonGraph> patterns;
  for (const CanonGraph& g : all_graphs_up_to_5_nodes()) {
    if (g.edge_count() <= 3) patterns.push_back(g);
  }
  // Plus patterns whose support exceeds 5 nodes.
  patterns.push_back(canon({{1, 2}, {3, 4}, {5, 6}}));
  CHECK(patterns.size() == 9);
  const auto hosts = all_graphs_up_to_5_nodes();
  for (const CanonGraph& p : patterns) {
    for (const CanonGraph& h : hosts) {
      CHECK(gqs::evaluate(p, h) == gqs::evaluate_oracle(p, h));
    }
  }
}

TEST_CASE("series constructor validates and deduplicates") {
  const gqs::TruncatedSeries s(3, {{{1, 2}}, {{1, 2}}, {{2, 3}}});
  CHECK(s.size() == 2);
  CHECK_THROWS_AS(gqs::TruncatedSeries(2, {{{1, 3}}}), gqs::DomainError);
}

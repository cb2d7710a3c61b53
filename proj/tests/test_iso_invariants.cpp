#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "gqs/config.hpp"
#include "gqs/enumerate.hpp"
#include "gqs/errors.hpp"
#include "gqs/graph.hpp"
#include "gqs/invariants.hpp"
#include "gqs/series.hpp"

namespace {

using gqs::CanonGraph;
using gqs::EdgeList;

CanonGraph canon(const EdgeList& e) { return gqs::canonical(e); }

const CanonGraph kK2 = canon({{1, 2}});
const CanonGraph kP3 = canon({{1, 2}, {1, 3}});
const CanonGraph kK3 = canon({{1, 2}, {1, 3}, {2, 3}});
const CanonGraph kC5 = canon({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
const CanonGraph kP4 = canon({{1, 2}, {1, 3}, {2, 4}});

std::vector<std::vector<int>> all_boolean(int len) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::vector<int> v(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = mask >> i & 1;
    out.push_back(std::move(v));
  }
  return out;
}

// Integer partitions of m, each sorted descending.
void partitions_into(int m, int max_part, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
  if (m == 0) {
    out.push_back(acc);
    return;
  }
  for (int part = std::min(m, max_part); part >= 1; --part) {
    acc.push_back(part);
    partitions_into(m - part, part, acc, out);
    acc.pop_back();
  }
}

}  // namespace

TEST_CASE("separating family contents for small n") {
  CHECK(gqs::separating_family(2).empty());
  CHECK(gqs::separating_family(3) == std::vector<CanonGraph>{kK2});
  CHECK(gqs::separating_family(4) ==
        std::vector<CanonGraph>{kK2, kP3, kK3,
                                canon({{1, 2}, {1, 3}, {1, 4}}), kP4});
  CHECK(gqs::separating_family(5) ==
        std::vector<CanonGraph>{
            kK2, kP3, kK3, canon({{1, 2}, {1, 3}, {1, 4}}), kP4,
            canon({{1, 2}, {1, 3}, {1, 4}, {2, 3}}),
            canon({{1, 2}, {1, 3}, {2, 4}, {3, 4}}),
            canon({{1, 2}, {1, 3}, {1, 4}, {1, 5}}),
            canon({{1, 2}, {1, 3}, {1, 4}, {2, 5}}),
            canon({{1, 2}, {1, 3}, {2, 4}, {3, 5}}),
            canon({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}),
            canon({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}}),
            canon({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}}),
            canon({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {4, 5}}),
            canon({{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}}),
            kC5});
}

TEST_CASE("separating family size and composition at n = 6") {
  const auto family = gqs::separating_family(6);
  CHECK(family.size() == 64);
  CHECK(std::is_sorted(family.begin(), family.end(), gqs::term_order_less));
  CHECK(std::set<CanonGraph>(family.begin(), family.end()).size() == 64);
  std::map<int, int> by_edges;
  for (const CanonGraph& g : family) {
    CHECK(gqs::is_connected(g));
    CHECK(g.node_count() <= 6);
    CHECK(g.edge_count() >= 1);
    CHECK(g.edge_count() <= 7);
    ++by_edges[g.edge_count()];
  }
  CHECK(by_edges == std::map<int, int>{{1, 1}, {2, 1}, {3, 3}, {4, 5},
                                       {5, 12}, {6, 19}, {7, 23}});
}

TEST_CASE("separating family domain and capacity errors") {
  CHECK_THROWS_AS(gqs::separating_family(1), gqs::DomainError);
  CHECK_THROWS_AS(gqs::separating_family(11), gqs::CapacityError);
  // Edge budget floor(C(7,2)/2) = 10 exceeds the default edge limit.
  CHECK_THROWS_AS(gqs::separating_family(7), gqs::CapacityError);
}

TEST_CASE("invariant vectors of named hosts") {
  const auto v = gqs::invariant_vector(kK2, 3);
  CHECK(v.n == 3);
  CHECK(v.entries ==
        std::vector<std::pair<CanonGraph, long long>>{{kK2, 1}});
  CHECK(gqs::invariant_vector(kP3, 3).entries ==
        std::vector<std::pair<CanonGraph, long long>>{{kK2, 2}});
  CHECK_THROWS_AS(gqs::invariant_vector(kC5, 4), gqs::DomainError);

  // The two six-edge five-node hosts that share a full matrix-row prefix
  // split at the claw count: 3 against 4.
  const CanonGraph g22 =
      canon({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}});
  const CanonGraph bowtie =
      canon({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}});
  const auto v22 = gqs::invariant_vector(g22, 5);
  const auto vbt = gqs::invariant_vector(bowtie, 5);
  const auto values = [](const gqs::InvariantVector& iv, std::size_t k) {
    std::vector<long long> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(iv.entries[i].second);
    return out;
  };
  CHECK(values(v22, 4) == std::vector<long long>{6, 10, 2, 3});
  CHECK(values(vbt, 4) == std::vector<long long>{6, 10, 2, 4});
  CHECK(v22.entries != vbt.entries);
}

TEST_CASE("isomorphism test agrees with canonical equality") {
  const auto hosts = gqs::generate_by_nodes(4);
  for (const CanonGraph& a : hosts) {
    for (const CanonGraph& b : hosts) {
      CHECK(gqs::iso_test(a, b) == (a == b));
    }
  }
  CHECK_FALSE(gqs::iso_test(kK2, CanonGraph()));
  CHECK(gqs::iso_test(CanonGraph(), CanonGraph()));
  const CanonGraph g21 =
      canon({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
  const CanonGraph g22 =
      canon({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}});
  const CanonGraph bowtie =
      canon({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}});
  CHECK_FALSE(gqs::iso_test(g22, bowtie));
  CHECK_FALSE(gqs::iso_test(g21, g22));
  CHECK(gqs::iso_test(bowtie, bowtie));
}

TEST_CASE("decks of named hosts") {
  const auto dk3 = gqs::deck(kK3);
  CHECK(dk3.card_nodes == 2);
  CHECK(dk3.cards == std::vector<CanonGraph>{kK2, kK2, kK2});

  const auto dp3 = gqs::deck(kP3);
  CHECK(dp3.cards == std::vector<CanonGraph>{CanonGraph(), kK2, kK2});

  const auto dc5 = gqs::deck(kC5);
  CHECK(dc5.card_nodes == 4);
  CHECK(dc5.cards == std::vector<CanonGraph>{kP4, kP4, kP4, kP4, kP4});

  // Cards keep their nominal size even when deletion strands a vertex.
  const auto dm2 = gqs::deck(canon({{1, 2}, {3, 4}}));
  CHECK(dm2.card_nodes == 3);
  CHECK(dm2.cards == std::vector<CanonGraph>{kK2, kK2, kK2, kK2});

  CHECK_THROWS_AS(gqs::deck(kK2), gqs::DomainError);
  CHECK_THROWS_AS(gqs::deck(CanonGraph()), gqs::DomainError);
}

TEST_CASE("kelly identity on named cases") {
  CHECK(gqs::kelly_check(kK2, kK3) == gqs::KellyReport{3, 3, true});
  CHECK(gqs::kelly_check(kK2, kP3) == gqs::KellyReport{2, 2, true});
  CHECK(gqs::kelly_check(kP3, kC5) == gqs::KellyReport{10, 10, true});
  CHECK_THROWS_AS(gqs::kelly_check(kK3, kK3), gqs::DomainError);
  CHECK_THROWS_AS(gqs::kelly_check(kC5, kK3), gqs::DomainError);
}

TEST_CASE("kelly identity across all small pattern-host pairs") {
  const auto hosts = gqs::generate_by_nodes(5);
  const auto patterns = gqs::generate_by_nodes(4);
  for (const CanonGraph& host : hosts) {
    if (host.node_count() < 3) continue;
    for (const CanonGraph& g : patterns) {
      if (g.node_count() >= host.node_count()) continue;
      CHECK(gqs::kelly_check(g, host).holds);
    }
  }
}

TEST_CASE("the scaling factor belongs on the host side") {
  // Moving it to the deck side breaks immediately: one edge in a 5-cycle.
  const long long host_count = gqs::evaluate(kK2, kC5);
  long long deck_sum = 0;
  for (const CanonGraph& card : gqs::deck(kC5).cards) {
    deck_sum += gqs::evaluate(kK2, card);
  }
  CHECK(host_count == 5);
  CHECK(deck_sum == 15);
  CHECK((5 - 2) * host_count == deck_sum);      // host-side scaling holds
  CHECK(host_count != (5 - 2) * deck_sum);      // deck-side scaling fails
}

TEST_CASE("elementary symmetric evaluation collapses to binomials") {
  CHECK(gqs::elementary_eval({1, 1, 0, 1}, 2) == 3);
  CHECK(gqs::elementary_eval({}, 0) == 1);
  CHECK(gqs::elementary_eval({0, 0, 0}, 1) == 0);
  CHECK(gqs::elementary_eval({1, 1}, 5) == 0);
  CHECK_THROWS_AS(gqs::elementary_eval({0, 2}, 1), gqs::DomainError);
  CHECK_THROWS_AS(gqs::elementary_eval({1}, -1), gqs::DomainError);
  for (int len = 0; len <= 12; ++len) {
    for (const auto& v : all_boolean(len)) {
      const int ones =
          static_cast<int>(std::count(v.begin(), v.end(), 1));
      for (int k = 0; k <= len + 1; ++k) {
        CHECK(gqs::elementary_eval(v, k) == gqs::binomial(ones, k));
      }
    }
  }
}

TEST_CASE("vandermonde vanishing on boolean vectors") {
  CHECK(gqs::vandermonde_vanishes({{1, 2, 3}}, {0, 1, 1}));
  CHECK_FALSE(gqs::vandermonde_vanishes({{1, 2}}, {0, 1}));
  CHECK_FALSE(gqs::vandermonde_vanishes({{1, 2}, {3, 4}}, {0, 1, 0, 1}));
  CHECK(gqs::vandermonde_vanishes({{1, 2}, {3, 4}}, {0, 1, 1, 1}));
  CHECK(gqs::vandermonde_vanishes({}, {0, 1}) == false);  // empty product
  CHECK_THROWS_AS(gqs::vandermonde_vanishes({{1, 5}}, {0, 1}),
                  gqs::DomainError);
  CHECK_THROWS_AS(gqs::vandermonde_vanishes({{0}}, {0, 1}), gqs::DomainError);

  // Any column with three or more positions forces a zero, consecutive or
  // not.
  for (const auto& v : all_boolean(8)) {
    CHECK(gqs::vandermonde_vanishes({{2, 5, 7}}, v));
  }
  for (int m = 3; m <= 7; ++m) {
    std::vector<std::vector<int>> shapes;
    std::vector<int> acc;
    partitions_into(m, m, acc, shapes);
    for (const auto& shape : shapes) {
      if (shape[0] < 3) continue;
      std::vector<std::vector<int>> columns;
      int next = 1;
      for (const int len : shape) {
        std::vector<int> column;
        for (int i = 0; i < len; ++i) column.push_back(next++);
        columns.push_back(std::move(column));
      }
      for (const auto& v : all_boolean(m)) {
        CHECK(gqs::vandermonde_vanishes(columns, v));
      }
    }
  }
}

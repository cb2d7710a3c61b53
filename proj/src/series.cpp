#include "gqs/series.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "gqs/config.hpp"
#include "gqs/errors.hpp"

namespace gqs {

TruncatedSeries::TruncatedSeries(int label_limit,
                                 std::vector<EdgeList> monomials)
    : label_limit_(label_limit), monomials_(std::move(monomials)) {
  std::sort(monomials_.begin(), monomials_.end());
  monomials_.erase(std::unique(monomials_.begin(), monomials_.end()),
                   monomials_.end());
  for (const EdgeList& m : monomials_) {
    for (const auto& [a, b] : m) {
      if (a < 1 || b > label_limit_) {
        throw DomainError("monomial labels outside 1..label_limit");
      }
    }
  }
}

TruncatedSeries expand(const CanonGraph& g, int labels) {
  if (labels < 0) throw DomainError("label count must be non-negative");
  if (labels > limits().max_nodes) {
    throw CapacityError("expansion at " + std::to_string(labels) +
                        " labels exceeds the node limit of " +
                        std::to_string(limits().max_nodes));
  }
  const int n = g.node_count();
  std::vector<EdgeList> monomials;
  if (n > labels) return TruncatedSeries(labels, std::move(monomials));
  if (g.is_empty()) {
    monomials.push_back({});
    return TruncatedSeries(labels, std::move(monomials));
  }
  const std::vector<LabeledGraph> copies = orbit(g);
  // Choose the support as a sorted n-subset of {1..labels}, then place each
  // distinct copy on it order-preservingly.
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::iota(pick.begin(), pick.end(), 1);
  const auto advance = [&]() {
    int i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == labels - (n - 1 - i)) {
      --i;
    }
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
  };
  do {
    for (const LabeledGraph& copy : copies) {
      EdgeList e;
      e.reserve(copy.edges().size());
      for (const auto& [a, b] : copy.edges()) {
        e.emplace_back(pick[static_cast<std::size_t>(a) - 1],
                       pick[static_cast<std::size_t>(b) - 1]);
      }
      std::sort(e.begin(), e.end());
      monomials.push_back(std::move(e));
    }
  } while (advance());
  return TruncatedSeries(labels, std::move(monomials));
}

namespace {

// Counts injective maps of the pattern's vertices into the host that send
// every pattern edge to a host edge.  Pattern vertices are visited component
// by component, within a component always adjacent to an already placed
// vertex, so partial maps are pruned early.
struct EmbeddingCounter {
  int pn = 0;
  int hn = 0;
  std::vector<std::uint32_t> padj;  // pattern adjacency, 0-based
  std::vector<std::uint32_t> hadj;  // host adjacency, 0-based
  std::vector<int> pdeg;
  std::vector<int> hdeg;
  std::vector<int> order;   // visit order of pattern vertices
  std::vector<int> image;   // image[p] = assigned host vertex or -1
  std::uint32_t used = 0;
  long long count = 0;

  void build_order() {
    std::vector<char> placed(static_cast<std::size_t>(pn), 0);
    for (int step = 0; step < pn; ++step) {
      int best = -1;
      bool best_attached = false;
      for (int v = 0; v < pn; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        bool attached = false;
        for (int u : order) {
          if (padj[static_cast<std::size_t>(v)] >> u & 1u) {
            attached = true;
            break;
          }
        }
        if (best == -1 || (attached && !best_attached) ||
            (attached == best_attached &&
             pdeg[static_cast<std::size_t>(v)] > pdeg[static_cast<std::size_t>(best)])) {
          best = v;
          best_attached = attached;
        }
      }
      order.push_back(best);
      placed[static_cast<std::size_t>(best)] = 1;
    }
  }

  void dfs(int step) {
    if (step == pn) {
      ++count;
      return;
    }
    const int p = order[static_cast<std::size_t>(step)];
    for (int h = 0; h < hn; ++h) {
      if (used >> h & 1u) continue;
      if (hdeg[static_cast<std::size_t>(h)] < pdeg[static_cast<std::size_t>(p)]) {
        continue;
      }
      bool ok = true;
      std::uint32_t nbrs = padj[static_cast<std::size_t>(p)];
      while (nbrs) {
        const int q = __builtin_ctz(nbrs);
        nbrs &= nbrs - 1;
        const int iq = image[static_cast<std::size_t>(q)];
        if (iq >= 0 && !(hadj[static_cast<std::size_t>(h)] >> iq & 1u)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(p)] = h;
      used |= std::uint32_t{1} << h;
      dfs(step + 1);
      used &= ~(std::uint32_t{1} << h);
      image[static_cast<std::size_t>(p)] = -1;
    }
  }
};

}  // namespace

long long evaluate(const CanonGraph& g, const CanonGraph& host) {
  if (g.is_empty()) return 1;
  if (g.node_count() > host.node_count() ||
      g.edge_count() > host.edge_count()) {
    return 0;
  }
  EmbeddingCounter ec;
  ec.pn = g.node_count();
  ec.hn = host.node_count();
  ec.padj.assign(static_cast<std::size_t>(ec.pn), 0);
  ec.hadj.assign(static_cast<std::size_t>(ec.hn), 0);
  for (const auto& [a, b] : g.edges()) {
    ec.padj[static_cast<std::size_t>(a) - 1] |= std::uint32_t{1} << (b - 1);
    ec.padj[static_cast<std::size_t>(b) - 1] |= std::uint32_t{1} << (a - 1);
  }
  for (const auto& [a, b] : host.edges()) {
    ec.hadj[static_cast<std::size_t>(a) - 1] |= std::uint32_t{1} << (b - 1);
    ec.hadj[static_cast<std::size_t>(b) - 1] |= std::uint32_t{1} << (a - 1);
  }
  ec.pdeg.resize(static_cast<std::size_t>(ec.pn));
  ec.hdeg.resize(static_cast<std::size_t>(ec.hn));
  for (int v = 0; v < ec.pn; ++v) {
    ec.pdeg[static_cast<std::size_t>(v)] =
        __builtin_popcount(ec.padj[static_cast<std::size_t>(v)]);
  }
  for (int v = 0; v < ec.hn; ++v) {
    ec.hdeg[static_cast<std::size_t>(v)] =
        __builtin_popcount(ec.hadj[static_cast<std::size_t>(v)]);
  }
  ec.image.assign(static_cast<std::size_t>(ec.pn), -1);
  ec.build_order();
  ec.dfs(0);
  const long long aut = automorphism_count(g);
  if (ec.count % aut != 0) {
    throw DomainError("embedding count not divisible by automorphism count");
  }
  return ec.count / aut;
}

long long evaluate_oracle(const CanonGraph& g, const CanonGraph& host) {
  if (g.is_empty()) return 1;
  const int m = host.edge_count();
  const int k = g.edge_count();
  if (k > m) return 0;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  long long count = 0;
  const auto advance = [&]() {
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - (k - i)) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
  };
  do {
    EdgeList sub;
    sub.reserve(static_cast<std::size_t>(k));
    for (int i : pick) sub.push_back(host.edges()[static_cast<std::size_t>(i)]);
    if (canonical(sub) == g) ++count;
  } while (advance());
  return count;
}

}  // namespace gqs

#include "gqs/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "gqs/config.hpp"
#include "gqs/errors.hpp"

namespace gqs {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = static_cast<int>(img_.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("permutation images must be a bijection of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw DomainError("permutation size must be non-negative");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

int Permutation::operator()(int label) const {
  if (label < 1 || label > size()) {
    throw DomainError("label " + std::to_string(label) +
                      " outside permutation domain 1.." +
                      std::to_string(size()));
  }
  return img_[static_cast<std::size_t>(label) - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < size(); ++i) {
    inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)]) - 1] =
        i + 1;
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) {
    throw DomainError("composed permutations must have equal size");
  }
  std::vector<int> img(img_.size());
  for (int i = 0; i < size(); ++i) {
    img[static_cast<std::size_t>(i)] = next(img_[static_cast<std::size_t>(i)]);
  }
  return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------
// LabeledGraph

namespace {

void normalize_edges(EdgeList& edges) {
  for (auto& [a, b] : edges) {
    if (a < 1 || b < 1) throw DomainError("vertex labels must be positive");
    if (a == b) throw DomainError("loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw DomainError("duplicate edges are not allowed");
  }
}

}  // namespace

LabeledGraph::LabeledGraph(EdgeList edges) : edges_(std::move(edges)) {
  normalize_edges(edges_);
}

std::vector<int> LabeledGraph::support() const {
  std::vector<int> s;
  s.reserve(edges_.size() * 2);
  for (const auto& [a, b] : edges_) {
    s.push_back(a);
    s.push_back(b);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

int LabeledGraph::max_label() const noexcept {
  int m = 0;
  for (const auto& e : edges_) m = std::max(m, e.second);
  return m;
}

std::size_t CanonGraphHash::operator()(const CanonGraph& g) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(g.node_count());
  for (const auto& [a, b] : g.edges()) {
    std::uint64_t x = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
    x ^= h;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 31;
    h = x;
  }
  return static_cast<std::size_t>(h);
}

LabeledGraph relabel(const LabeledGraph& g, const Permutation& sigma) {
  if (g.max_label() > sigma.size()) {
    throw DomainError("permutation is smaller than the graph's label range");
  }
  EdgeList edges;
  edges.reserve(g.edges().size());
  for (const auto& [a, b] : g.edges()) edges.emplace_back(sigma(a), sigma(b));
  return LabeledGraph(std::move(edges));
}

LabeledGraph pack(const LabeledGraph& g) {
  const std::vector<int> sup = g.support();
  std::map<int, int> to_packed;
  for (int i = 0; i < static_cast<int>(sup.size()); ++i) {
    to_packed[sup[static_cast<std::size_t>(i)]] = i + 1;
  }
  EdgeList edges;
  edges.reserve(g.edges().size());
  for (const auto& [a, b] : g.edges()) {
    edges.emplace_back(to_packed[a], to_packed[b]);
  }
  return LabeledGraph(std::move(edges));
}

// ---------------------------------------------------------------------------
// Canonical form
//
// The sorted edge sequence compared ascending is minimized exactly when the
// indicator string of the adjacency upper triangle, read row-major with
// (1,2) most significant, is maximized: between two edge sets of equal size
// the lex-smaller sequence is the one containing the smallest differing
// edge, i.e. the one whose indicator string is larger.  The search below
// assigns new labels one vertex at a time and maximizes that string.

namespace {

constexpr int kMaxSearchNodes = 23;  // 23*22/2 = 253 bits fit the 4-word string

// Fixed-width bit string; rank 0 is the most significant bit, so integer
// comparison of the words matches positional comparison of the string.
struct BitStr {
  std::array<std::uint64_t, 4> w{};

  void set(int rank) {
    w[static_cast<std::size_t>(rank >> 6)] |=
        std::uint64_t{1} << (63 - (rank & 63));
  }
  friend bool operator<(const BitStr& a, const BitStr& b) { return a.w < b.w; }
  BitStr or_with(const BitStr& o) const {
    BitStr r;
    for (int i = 0; i < 4; ++i) {
      r.w[static_cast<std::size_t>(i)] =
          w[static_cast<std::size_t>(i)] | o.w[static_cast<std::size_t>(i)];
    }
    return r;
  }
};

// Row-major rank of the cell (i,j), 0 <= i < j < k.
inline int pair_rank(int i, int j, int k) {
  return i * (2 * k - i - 1) / 2 + (j - i - 1);
}

// Best-first relabeling search for one connected component given by 0-based
// adjacency masks.  Sound prunings only: the first label must go to a vertex
// of maximum degree (the leading row of the optimum is 1^d 0^* and longer
// runs dominate), and a branch is cut when even with every undecided cell
// set to 1 it cannot exceed the incumbent.
struct CanonSearch {
  int k = 0;
  std::array<std::uint32_t, kMaxSearchNodes> adj{};
  std::array<int, kMaxSearchNodes> deg{};
  std::array<int, kMaxSearchNodes> order{};  // vertices by degree descending
  std::array<BitStr, kMaxSearchNodes + 1> unknown_after{};
  std::array<int, kMaxSearchNodes> assign{};
  std::array<int, kMaxSearchNodes> best_assign{};
  BitStr best{};
  bool have_best = false;
  std::uint32_t used = 0;
  int max_deg = 0;

  void prepare() {
    for (int v = 0; v < k; ++v) {
      deg[static_cast<std::size_t>(v)] =
          __builtin_popcount(adj[static_cast<std::size_t>(v)]);
      max_deg = std::max(max_deg, deg[static_cast<std::size_t>(v)]);
      order[static_cast<std::size_t>(v)] = v;
    }
    std::stable_sort(order.begin(), order.begin() + k, [&](int a, int b) {
      return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    });
    for (int t = k; t >= 0; --t) {
      BitStr m;
      for (int j = t; j < k; ++j) {
        for (int i = 0; i < j; ++i) m.set(pair_rank(i, j, k));
      }
      unknown_after[static_cast<std::size_t>(t)] = m;
    }
  }

  void dfs(int t, const BitStr& partial) {
    if (t == k) {
      if (!have_best || best < partial) {
        best = partial;
        best_assign = assign;
        have_best = true;
      }
      return;
    }
    for (int idx = 0; idx < k; ++idx) {
      const int v = order[static_cast<std::size_t>(idx)];
      if (used & (std::uint32_t{1} << v)) continue;
      if (t == 0 && deg[static_cast<std::size_t>(v)] != max_deg) continue;
      BitStr p2 = partial;
      for (int i = 0; i < t; ++i) {
        if (adj[static_cast<std::size_t>(v)] >>
                assign[static_cast<std::size_t>(i)] &
            1u) {
          p2.set(pair_rank(i, t, k));
        }
      }
      if (have_best) {
        const BitStr optimistic =
            p2.or_with(unknown_after[static_cast<std::size_t>(t) + 1]);
        if (!(best < optimistic)) continue;
      }
      assign[static_cast<std::size_t>(t)] = v;
      used |= std::uint32_t{1} << v;
      dfs(t + 1, p2);
      used &= ~(std::uint32_t{1} << v);
    }
  }
};

// Canonical edge list of one connected component presented as packed edges
// on labels 1..k.
EdgeList canonical_connected(const EdgeList& edges, int k) {
  if (k > limits().max_nodes) {
    throw CapacityError("connected component has " + std::to_string(k) +
                        " nodes, above the limit of " +
                        std::to_string(limits().max_nodes));
  }
  CanonSearch s;
  s.k = k;
  for (const auto& [a, b] : edges) {
    s.adj[static_cast<std::size_t>(a) - 1] |= std::uint32_t{1} << (b - 1);
    s.adj[static_cast<std::size_t>(b) - 1] |= std::uint32_t{1} << (a - 1);
  }
  s.prepare();
  BitStr empty;
  s.dfs(0, empty);
  std::array<int, kMaxSearchNodes> new_label{};
  for (int t = 0; t < k; ++t) {
    new_label[static_cast<std::size_t>(s.best_assign[static_cast<std::size_t>(t)])] =
        t + 1;
  }
  EdgeList out;
  out.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    int x = new_label[static_cast<std::size_t>(a) - 1];
    int y = new_label[static_cast<std::size_t>(b) - 1];
    if (x > y) std::swap(x, y);
    out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Component {
  EdgeList edges;  // canonical, labels 1..nodes
  int nodes = 0;
};

// Appends b's edges after a's with b's labels shifted past a's.
EdgeList concat_shifted(const Component& a, const Component& b) {
  EdgeList seq = a.edges;
  seq.reserve(a.edges.size() + b.edges.size());
  for (const auto& [x, y] : b.edges) seq.emplace_back(x + a.nodes, y + a.nodes);
  return seq;
}

// Components are arranged to minimize the assembled edge sequence; as with
// minimal string concatenation, A goes before B exactly when A-then-B reads
// smaller than B-then-A.
bool assembly_less(const Component& a, const Component& b) {
  return concat_shifted(a, b) < concat_shifted(b, a);
}

std::vector<std::vector<int>> support_components(const LabeledGraph& packed) {
  const int n = packed.max_label();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [a, b] : packed.edges()) {
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(groups.size());
  for (auto& [root, verts] : groups) out.push_back(std::move(verts));
  return out;
}

}  // namespace

CanonGraph canonical(const LabeledGraph& g) {
  if (g.is_empty()) return CanonGraph();
  const LabeledGraph packed = pack(g);
  std::vector<Component> comps;
  for (const std::vector<int>& verts : support_components(packed)) {
    std::map<int, int> local;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
      local[verts[static_cast<std::size_t>(i)]] = i + 1;
    }
    EdgeList comp_edges;
    for (const auto& [a, b] : packed.edges()) {
      if (local.count(a) && local.count(b)) {
        comp_edges.emplace_back(local[a], local[b]);
      }
    }
    Component c;
    c.nodes = static_cast<int>(verts.size());
    c.edges = canonical_connected(comp_edges, c.nodes);
    comps.push_back(std::move(c));
  }
  std::sort(comps.begin(), comps.end(), assembly_less);
  EdgeList edges;
  int offset = 0;
  for (const Component& c : comps) {
    for (const auto& [a, b] : c.edges) edges.emplace_back(a + offset, b + offset);
    offset += c.nodes;
  }
  std::sort(edges.begin(), edges.end());
  return CanonGraph(std::move(edges), offset);
}

CanonGraph canonical(const EdgeList& edges) {
  return canonical(LabeledGraph(edges));
}

CanonGraph canonical_exhaustive(const LabeledGraph& g) {
  if (g.is_empty()) return CanonGraph();
  const LabeledGraph packed = pack(g);
  const int k = packed.max_label();
  if (k > 9) {
    throw CapacityError("exhaustive canonical form supports at most 9 labels");
  }
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 1);
  EdgeList best;
  bool have_best = false;
  EdgeList scratch(packed.edges().size(), Edge{});
  do {
    scratch.clear();
    for (const auto& [a, b] : packed.edges()) {
      int x = img[static_cast<std::size_t>(a) - 1];
      int y = img[static_cast<std::size_t>(b) - 1];
      if (x > y) std::swap(x, y);
      scratch.emplace_back(x, y);
    }
    std::sort(scratch.begin(), scratch.end());
    if (!have_best || scratch < best) {
      best = scratch;
      have_best = true;
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return CanonGraph(std::move(best), k);
}

std::vector<LabeledGraph> orbit(const CanonGraph& g) {
  if (g.is_empty()) return {LabeledGraph()};
  const int k = g.node_count();
  if (k > 10) throw CapacityError("orbit enumeration supports at most 10 nodes");
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 1);
  std::set<EdgeList> seen;
  do {
    EdgeList e;
    e.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) {
      int x = img[static_cast<std::size_t>(a) - 1];
      int y = img[static_cast<std::size_t>(b) - 1];
      if (x > y) std::swap(x, y);
      e.emplace_back(x, y);
    }
    std::sort(e.begin(), e.end());
    seen.insert(std::move(e));
  } while (std::next_permutation(img.begin(), img.end()));
  std::vector<LabeledGraph> out;
  out.reserve(seen.size());
  for (const EdgeList& e : seen) out.emplace_back(e);
  return out;
}

long long orbit_size(const CanonGraph& g) {
  return factorial(g.node_count()) / automorphism_count(g);
}

namespace {

long long automorphisms_connected(const EdgeList& edges, int k) {
  if (k > 10) {
    throw CapacityError(
        "automorphism search supports components of at most 10 nodes");
  }
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 1);
  long long count = 0;
  EdgeList scratch;
  do {
    scratch.clear();
    for (const auto& [a, b] : edges) {
      int x = img[static_cast<std::size_t>(a) - 1];
      int y = img[static_cast<std::size_t>(b) - 1];
      if (x > y) std::swap(x, y);
      scratch.emplace_back(x, y);
    }
    std::sort(scratch.begin(), scratch.end());
    if (scratch == edges) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

}  // namespace

long long automorphism_count(const CanonGraph& g) {
  if (g.is_empty()) return 1;
  std::map<CanonGraph, int> mult;
  for (const CanonGraph& c : components(g)) ++mult[c];
  long long total = 1;
  for (const auto& [comp, m] : mult) {
    const long long a = automorphisms_connected(comp.edges(), comp.node_count());
    for (int i = 0; i < m; ++i) total *= a;
    total *= factorial(m);
  }
  return total;
}

std::vector<CanonGraph> components(const CanonGraph& g) {
  std::vector<CanonGraph> out;
  if (g.is_empty()) return out;
  const LabeledGraph as_labeled(g.edges());
  for (const std::vector<int>& verts : support_components(as_labeled)) {
    EdgeList comp_edges;
    for (const auto& e : g.edges()) {
      if (std::binary_search(verts.begin(), verts.end(), e.first)) {
        comp_edges.push_back(e);
      }
    }
    out.push_back(canonical(comp_edges));
  }
  return out;
}

int component_count(const CanonGraph& g) {
  if (g.is_empty()) return 0;
  return static_cast<int>(support_components(LabeledGraph(g.edges())).size());
}

bool is_connected(const CanonGraph& g) { return component_count(g) <= 1; }

CanonGraph disjoint_union(const CanonGraph& a, const CanonGraph& b) {
  EdgeList edges = a.edges();
  edges.reserve(a.edges().size() + b.edges().size());
  for (const auto& [x, y] : b.edges()) {
    edges.emplace_back(x + a.node_count(), y + a.node_count());
  }
  return canonical(edges);
}

bool term_order_less(const CanonGraph& a, const CanonGraph& b) {
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  if (a.node_count() != b.node_count()) return a.node_count() < b.node_count();
  return a.edges() < b.edges();
}

namespace {

bool colex_less(const Edge& a, const Edge& b) {
  if (a.second != b.second) return a.second < b.second;
  return a.first < b.first;
}

}  // namespace

bool matrix_order_less(const CanonGraph& a, const CanonGraph& b) {
  if (a.node_count() != b.node_count()) return a.node_count() < b.node_count();
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  EdgeList ca = a.edges();
  EdgeList cb = b.edges();
  std::sort(ca.begin(), ca.end(), colex_less);
  std::sort(cb.begin(), cb.end(), colex_less);
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(),
                                      cb.end(), colex_less);
}

long long factorial(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial supports 0..20");
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long long binomial(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("binomial arguments must be non-negative");
  if (k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > static_cast<__int128>(0x7fffffffffffffffLL)) {
      throw DomainError("binomial overflows 64 bits");
    }
  }
  return static_cast<long long>(r);
}

}  // namespace gqs

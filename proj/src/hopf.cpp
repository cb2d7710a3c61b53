#include "gqs/hopf.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqs/config.hpp"
#include "gqs/errors.hpp"
#include "gqs/series.hpp"

namespace gqs {

namespace {

Rational rat(long long v) { return Rational(static_cast<long>(v)); }

// Calls fn once per k-subset of {0..m-1}, given as sorted indices.
template <typename Fn>
void for_each_combination(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    fn(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - (k - i)) --i;
    if (i < 0) return;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] =
          pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

HopfElement HopfElement::basis(const CanonGraph& g) {
  HopfElement e;
  e.terms_.emplace(g, 1);
  return e;
}

Rational HopfElement::coefficient(const CanonGraph& g) const {
  const auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

HopfElement& HopfElement::add_term(const CanonGraph& g, const Rational& c) {
  const auto it = terms_.emplace(g, 0).first;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
  return *this;
}

HopfElement operator+(const HopfElement& a, const HopfElement& b) {
  HopfElement out = a;
  for (const auto& [g, c] : b.terms_) out.add_term(g, c);
  return out;
}

HopfElement operator-(const HopfElement& a, const HopfElement& b) {
  HopfElement out = a;
  for (const auto& [g, c] : b.terms_) out.add_term(g, -c);
  return out;
}

HopfElement HopfElement::operator-() const {
  HopfElement out;
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
  return out;
}

HopfElement operator*(const Rational& c, const HopfElement& a) {
  HopfElement out;
  if (c == 0) return out;
  for (const auto& [g, t] : a.terms_) out.terms_.emplace(g, c * t);
  return out;
}

HopfElement operator*(const HopfElement& a, const Rational& c) {
  return c * a;
}

Rational TensorElement::coefficient(const CanonGraph& l,
                                    const CanonGraph& r) const {
  const auto it = terms_.find({l, r});
  return it == terms_.end() ? Rational(0) : it->second;
}

TensorElement& TensorElement::add_term(const CanonGraph& l,
                                       const CanonGraph& r,
                                       const Rational& c) {
  const auto it = terms_.emplace(Key{l, r}, 0).first;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
  return *this;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  TensorElement out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, c);
  return out;
}

long long structure_constant(const CanonGraph& g1, const CanonGraph& g2,
                             const CanonGraph& g) {
  const int m = g.edge_count();
  const int e1 = g1.edge_count();
  const int e2 = g2.edge_count();
  if (e1 > m || e2 > m || e1 + e2 < m) return 0;
  if (m == 0) return 1;
  const EdgeList& edges = g.edges();
  std::map<std::uint32_t, CanonGraph> canon_of;
  const auto canon_subset = [&](std::uint32_t mask) -> const CanonGraph& {
    auto it = canon_of.find(mask);
    if (it == canon_of.end()) {
      EdgeList sub;
      for (int i = 0; i < m; ++i) {
        if (mask >> i & 1u) sub.push_back(edges[static_cast<std::size_t>(i)]);
      }
      it = canon_of.emplace(mask, canonical(sub)).first;
    }
    return it->second;
  };
  // B must contain the complement of A; the intersection A and B has
  // forced size e1 + e2 - m.
  const int overlap = e1 + e2 - m;
  const std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1u;
  long long count = 0;
  for_each_combination(m, e1, [&](const std::vector<int>& apick) {
    std::uint32_t amask = 0;
    for (const int i : apick) amask |= 1u << i;
    if (canon_subset(amask) != g1) return;
    for_each_combination(e1, overlap, [&](const std::vector<int>& spick) {
      std::uint32_t smask = 0;
      for (const int i : spick) {
        smask |= 1u << apick[static_cast<std::size_t>(i)];
      }
      const std::uint32_t bmask = (full & ~amask) | smask;
      if (canon_subset(bmask) == g2) ++count;
    });
  });
  return count;
}

namespace {

std::map<std::pair<CanonGraph, CanonGraph>, HopfElement> g_product_memo;
std::mutex g_product_mutex;

// Product of two basis graphs.  One factor is pinned to its own labels
// {1..n}; every copy of the other factor inside the combined label window
// {1..n1+n2} is unioned with it and the canonical results are tallied.
// Each tally converts to a coefficient by an exact orbit-size ratio, and
// every coefficient is then re-derived through structure_constant.
HopfElement basis_product(const CanonGraph& a, const CanonGraph& b) {
  if (a.is_empty()) return HopfElement::basis(b);
  if (b.is_empty()) return HopfElement::basis(a);
  if (a.node_count() + b.node_count() > limits().max_nodes) {
    throw CapacityError(
        "product needs " + std::to_string(a.node_count() + b.node_count()) +
        " labels, exceeding the node limit of " +
        std::to_string(limits().max_nodes));
  }
  {
    std::lock_guard<std::mutex> lock(g_product_mutex);
    const auto it = g_product_memo.find({a, b});
    if (it != g_product_memo.end()) return it->second;
  }
  const int N = a.node_count() + b.node_count();
  const auto stream_cost = [N](const CanonGraph& g) {
    return static_cast<__int128>(binomial(N, g.node_count())) *
           orbit_size(g);
  };
  const bool move_b = stream_cost(b) <= stream_cost(a);
  const CanonGraph& fixed = move_b ? a : b;
  const CanonGraph& moving = move_b ? b : a;

  const EdgeList& base = fixed.edges();
  const std::vector<LabeledGraph> movers = orbit(moving);
  const int nm = moving.node_count();
  std::map<CanonGraph, long long> tally;
  for_each_combination(N, nm, [&](const std::vector<int>& pick) {
    for (const LabeledGraph& copy : movers) {
      EdgeList placed;
      placed.reserve(copy.edges().size());
      for (const auto& [u, v] : copy.edges()) {
        placed.emplace_back(pick[static_cast<std::size_t>(u - 1)] + 1,
                            pick[static_cast<std::size_t>(v - 1)] + 1);
      }
      std::sort(placed.begin(), placed.end());
      EdgeList unioned;
      std::set_union(base.begin(), base.end(), placed.begin(), placed.end(),
                     std::back_inserter(unioned));
      ++tally[canonical(unioned)];
    }
  });

  // With X = {(copy of fixed, copy of moving) in the window whose union is
  // a copy of g}, counting X by either coordinate gives
  //   copies(fixed) * tally[g] = copies(g) * coefficient,
  // where copies(h) = C(N, nodes(h)) * orbit_size(h).
  const mpz_class fixed_copies =
      mpz_class(static_cast<long>(binomial(N, fixed.node_count()))) *
      static_cast<long>(orbit_size(fixed));
  HopfElement result;
  for (const auto& [g, t] : tally) {
    const mpz_class g_copies =
        mpz_class(static_cast<long>(binomial(N, g.node_count()))) *
        static_cast<long>(orbit_size(g));
    Rational c(fixed_copies * static_cast<long>(t), g_copies);
    c.canonicalize();
    if (c.get_den() != 1) {
      throw std::logic_error("product tally does not divide evenly");
    }
    if (c != rat(structure_constant(a, b, g))) {
      throw std::logic_error("product routes disagree");
    }
    result.add_term(g, c);
  }
  {
    std::lock_guard<std::mutex> lock(g_product_mutex);
    g_product_memo.emplace(std::make_pair(a, b), result);
  }
  return result;
}

}  // namespace

HopfElement multiply(const HopfElement& a, const HopfElement& b) {
  HopfElement out;
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      const Rational c = ca * cb;
      const HopfElement p = basis_product(ga, gb);
      for (const auto& [g, k] : p.terms()) {
        out.add_term(g, c * k);
      }
    }
  }
  return out;
}

TensorElement tensor(const HopfElement& x, const HopfElement& y) {
  TensorElement out;
  for (const auto& [gx, cx] : x.terms()) {
    for (const auto& [gy, cy] : y.terms()) {
      out.add_term(gx, gy, cx * cy);
    }
  }
  return out;
}

TensorElement multiply(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const HopfElement left =
          multiply(HopfElement::basis(ka.first), HopfElement::basis(kb.first));
      const HopfElement right = multiply(HopfElement::basis(ka.second),
                                         HopfElement::basis(kb.second));
      out = out + tensor(ca * cb * left, right);
    }
  }
  return out;
}

namespace {

// Distinct components of g with multiplicities, in canonical order.
std::vector<std::pair<CanonGraph, int>> component_multiset(
    const CanonGraph& g) {
  std::vector<std::pair<CanonGraph, int>> out;
  for (const CanonGraph& c : components(g)) {
    if (!out.empty() && out.back().first == c) {
      ++out.back().second;
    } else {
      out.emplace_back(c, 1);
    }
  }
  return out;
}

CanonGraph union_of(const std::vector<std::pair<CanonGraph, int>>& parts,
                    const std::vector<int>& take) {
  CanonGraph out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < take[i]; ++j) {
      out = disjoint_union(out, parts[i].first);
    }
  }
  return out;
}

// Calls fn(left, right) once per ordered two-part division of the
// component multiset of g.
template <typename Fn>
void for_each_splitting(const CanonGraph& g, Fn&& fn) {
  const auto parts = component_multiset(g);
  std::vector<int> take(parts.size(), 0);
  while (true) {
    std::vector<int> rest(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      rest[i] = parts[i].second - take[i];
    }
    fn(union_of(parts, take), union_of(parts, rest));
    std::size_t i = 0;
    while (i < parts.size() && take[i] == parts[i].second) {
      take[i] = 0;
      ++i;
    }
    if (i == parts.size()) return;
    ++take[i];
  }
}

}  // namespace

TensorElement coproduct(const HopfElement& x) {
  TensorElement out;
  for (const auto& [g, c] : x.terms()) {
    for_each_splitting(g, [&](const CanonGraph& l, const CanonGraph& r) {
      out.add_term(l, r, c);
    });
  }
  return out;
}

Rational counit(const HopfElement& x) {
  return x.coefficient(CanonGraph());
}

namespace {

std::map<CanonGraph, HopfElement> g_antipode_memo;
std::mutex g_antipode_mutex;

HopfElement basis_antipode(const CanonGraph& g) {
  if (g.is_empty()) return HopfElement::one();
  {
    std::lock_guard<std::mutex> lock(g_antipode_mutex);
    const auto it = g_antipode_memo.find(g);
    if (it != g_antipode_memo.end()) return it->second;
  }
  // From (id * S) applied to the coproduct being zero on g: the splitting
  // with empty left part is 1 tensor g, so S(g) is minus the sum of
  // left * S(right) over every other splitting.  Every such right part is
  // a proper sub-multiset of the components, so the recursion descends.
  HopfElement sum;
  for_each_splitting(g, [&](const CanonGraph& l, const CanonGraph& r) {
    if (r == g) return;
    sum = sum + multiply(HopfElement::basis(l), basis_antipode(r));
  });
  HopfElement result = -sum;
  {
    std::lock_guard<std::mutex> lock(g_antipode_mutex);
    g_antipode_memo.emplace(g, result);
  }
  return result;
}

}  // namespace

HopfElement antipode(const HopfElement& x) {
  HopfElement out;
  for (const auto& [g, c] : x.terms()) {
    out = out + c * basis_antipode(g);
  }
  return out;
}

HopfElement binomial_of_edge(int n) {
  if (n < 0) throw DomainError("edge binomial needs a nonnegative order");
  if (n > limits().max_edges) {
    throw CapacityError("edge binomial of order " + std::to_string(n) +
                        " exceeds the edge limit of " +
                        std::to_string(limits().max_edges));
  }
  const HopfElement e = HopfElement::basis(canonical(EdgeList{{1, 2}}));
  HopfElement out = HopfElement::one();
  for (int i = 0; i < n; ++i) {
    out = multiply(out, e - rat(i) * HopfElement::one());
  }
  return Rational(1, static_cast<long>(factorial(n))) * out;
}

Rational evaluate_element(const HopfElement& x, const CanonGraph& host) {
  Rational out(0);
  for (const auto& [g, c] : x.terms()) {
    out += c * rat(evaluate(g, host));
  }
  return out;
}

}  // namespace gqs

#ifndef GQS_SERIES_HPP
#define GQS_SERIES_HPP

#include <vector>

#include "gqs/graph.hpp"

namespace gqs {

// Truncation of a subgraph-counting series to a finite label set {1..N}:
// the set of labeled graphs (squarefree monomials under the idempotent law
// x*x = x) appearing with coefficient 1.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(int label_limit, std::vector<EdgeList> monomials);

  int label_limit() const noexcept { return label_limit_; }
  const std::vector<EdgeList>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) =
      default;

 private:
  int label_limit_ = 0;
  std::vector<EdgeList> monomials_;  // sorted, distinct, labels <= label_limit_
};

// All labeled copies of g with labels in {1..labels}: C(labels, n) * orbit
// monomials, sorted.  labels above limits().max_nodes raise CapacityError.
TruncatedSeries expand(const CanonGraph& g, int labels);

// Number of subgraphs of host isomorphic to g (the coefficient of any fixed
// labeled copy of host in the expanded series).  Counted by backtracking
// over injective embeddings and dividing by the automorphism count.
// evaluate(empty, host) == 1.
long long evaluate(const CanonGraph& g, const CanonGraph& host);

// Same value computed independently: enumerate the edge subsets of host of
// size g.edge_count() and count those whose canonical form is g.
long long evaluate_oracle(const CanonGraph& g, const CanonGraph& host);

}  // namespace gqs

#endif

#ifndef GQS_HOPF_HPP
#define GQS_HOPF_HPP

#include <gmpxx.h>

#include <map>
#include <utility>

#include "gqs/graph.hpp"

namespace gqs {

using Rational = mpq_class;

// Finite rational linear combination of basis graphs.  The empty graph is
// the multiplicative unit.  Zero coefficients are never stored.
class HopfElement {
 public:
  using TermMap = std::map<CanonGraph, Rational>;

  HopfElement() = default;

  static HopfElement zero() { return HopfElement(); }
  static HopfElement one() { return basis(CanonGraph()); }
  static HopfElement basis(const CanonGraph& g);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const CanonGraph& g) const;

  HopfElement& add_term(const CanonGraph& g, const Rational& c);

  friend HopfElement operator+(const HopfElement& a, const HopfElement& b);
  friend HopfElement operator-(const HopfElement& a, const HopfElement& b);
  HopfElement operator-() const;
  friend HopfElement operator*(const Rational& c, const HopfElement& a);
  friend HopfElement operator*(const HopfElement& a, const Rational& c);

  friend bool operator==(const HopfElement&, const HopfElement&) = default;

 private:
  TermMap terms_;
};

// Finite rational combination of ordered basis pairs (left tensor right).
class TensorElement {
 public:
  using Key = std::pair<CanonGraph, CanonGraph>;
  using TermMap = std::map<Key, Rational>;

  TensorElement() = default;

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const CanonGraph& l, const CanonGraph& r) const;

  TensorElement& add_term(const CanonGraph& l, const CanonGraph& r,
                          const Rational& c);

  friend TensorElement operator+(const TensorElement& a,
                                 const TensorElement& b);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  TermMap terms_;
};

// Number of ordered pairs (A, B) of edge subsets of g with A union B equal
// to the whole edge set, A isomorphic to g1 and B isomorphic to g2.  This
// is the coefficient of g in the product of g1 and g2, computed directly
// from its combinatorial definition.
long long structure_constant(const CanonGraph& g1, const CanonGraph& g2,
                             const CanonGraph& g);

// Product of two elements.  Basis products are found by fixing one copy of
// the first factor and streaming all copies of the second over a shared
// label window, then every discovered coefficient is re-derived through
// structure_constant; a mismatch aborts.  Results are memoized.
HopfElement multiply(const HopfElement& a, const HopfElement& b);
inline HopfElement operator*(const HopfElement& a, const HopfElement& b) {
  return multiply(a, b);
}

// Outer product x tensor y, and the componentwise product on tensors.
TensorElement tensor(const HopfElement& x, const HopfElement& y);
TensorElement multiply(const TensorElement& a, const TensorElement& b);

// Coproduct: a basis graph splits as the sum over ordered two-part
// divisions of its component multiset, every coefficient 1.
TensorElement coproduct(const HopfElement& x);

// Counit: the coefficient of the empty graph.
Rational counit(const HopfElement& x);

// Antipode.  S(empty) = empty; otherwise S is determined by the recursion
// sum over coproduct terms of left * S(right) = 0, solved for the term
// with empty left part.  S negates every connected basis graph.  Memoized.
HopfElement antipode(const HopfElement& x);

// The polynomial e(e-1)...(e-n+1)/n! in the single-edge basis element e,
// which expands to the sum of all basis graphs with exactly n edges.
// n above limits().max_edges raises CapacityError.
HopfElement binomial_of_edge(int n);

// Evaluation extended linearly from basis graphs (subgraph counts in the
// host) to arbitrary elements.  Multiplicative in its first argument.
Rational evaluate_element(const HopfElement& x, const CanonGraph& host);

}  // namespace gqs

#endif

"""Exact subgraph-counting algebra on unlabeled graphs.

Graphs cross the boundary as lists of (i, j) edge pairs with 1-based
labels; isolated vertices are not part of the universe.  Element
expansions come back as (edges, Fraction) pairs in display order.
"""

from fractions import Fraction

from ._gqs import (
    CapacityError,
    DomainError,
    ParseError,
    canon,
    deck,
    elementary_eval,
    euler_transform,
    evaluate,
    evaluate_oracle,
    expand,
    from_graph6,
    generate_by_edges,
    generate_by_nodes,
    get_limits,
    invariant_vector,
    iso,
    kelly,
    reset_limits,
    separating_family,
    set_limits,
    structure_constant,
    to_graph6,
    vandermonde_vanishes,
)
from ._gqs import antipode as _antipode
from ._gqs import binomial_of_edge as _binomial_of_edge
from ._gqs import coproduct as _coproduct
from ._gqs import product as _product


def _to_fractions(terms):
    return [(edges, Fraction(coeff)) for edges, coeff in terms]


def product(a, b):
    """Basis expansion of the product as (edges, Fraction) pairs."""
    return _to_fractions(_product(a, b))


def antipode(g):
    """Basis expansion of the antipode as (edges, Fraction) pairs."""
    return _to_fractions(_antipode(g))


def binomial_of_edge(n):
    """Sum of all n-edge basis graphs as (edges, Fraction) pairs."""
    return _to_fractions(_binomial_of_edge(n))


def coproduct(g):
    """Tensor expansion as ((left, right), Fraction) pairs."""
    return [(legs, Fraction(coeff)) for legs, coeff in _coproduct(g)]


__all__ = [
    "CapacityError",
    "DomainError",
    "ParseError",
    "antipode",
    "binomial_of_edge",
    "canon",
    "coproduct",
    "deck",
    "elementary_eval",
    "euler_transform",
    "evaluate",
    "evaluate_oracle",
    "expand",
    "from_graph6",
    "generate_by_edges",
    "generate_by_nodes",
    "get_limits",
    "invariant_vector",
    "iso",
    "kelly",
    "product",
    "reset_limits",
    "separating_family",
    "set_limits",
    "structure_constant",
    "to_graph6",
    "vandermonde_vanishes",
]

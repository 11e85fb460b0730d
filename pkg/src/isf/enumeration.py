"""Increasing spanning forests: enumeration, generating polynomials, checks.

Enumeration follows the structure of the factorization of the generating
polynomial: each vertex j independently either becomes a root or picks one
smaller neighbor as its parent.  Every choice vector yields an increasing
forest and every increasing forest arises exactly once, so there is no
generate-and-filter blowup.  The brute-force filter over all acyclic edge
subsets is kept in the test suite as an independent oracle.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import NamedTuple

from .errors import IndexViolation, InputError
from .graphs import Forest, OrderedGraph
from .polynomials import MultiPoly, NonnegReport, TPoly


@lru_cache(maxsize=None)
def _forests_by_components(g: OrderedGraph) -> dict:
    """All increasing spanning forests of g, grouped by component count.

    Each group is sorted lexicographically on its sorted edge list.
    """
    choices = [[None] + g.smaller_neighbors(j) for j in range(1, g.n + 1)]
    groups: dict = {k: [] for k in range(g.n + 1)}
    for parents in product(*choices):
        edges = frozenset(
            (i, j) for j, i in enumerate(parents, start=1) if i is not None
        )
        k = g.n - len(edges)
        groups[k].append(Forest(g.n, edges))
    return {
        k: tuple(sorted(fs, key=Forest.sort_key)) for k, fs in groups.items()
    }


def enumerate_if(g: OrderedGraph, k: int) -> list:
    """Increasing spanning forests of g with exactly k components."""
    if not 0 <= k <= g.n:
        raise InputError(f"need 0 <= k <= n={g.n}, got k={k}")
    return list(_forests_by_components(g)[k])


def a_poly(g: OrderedGraph, k: int) -> MultiPoly:
    """Generating polynomial of the k-component increasing forests."""
    if not 0 <= k <= g.n:
        raise InputError(f"need 0 <= k <= n={g.n}, got k={k}")
    return MultiPoly({f.sort_key(): 1 for f in _forests_by_components(g)[k]})


def isf_tpoly(g: OrderedGraph) -> TPoly:
    """The full generating polynomial in t, coefficient k = a_poly(g, k)."""
    return TPoly([a_poly(g, k) for k in range(g.n + 1)])


class FactorizationReport(NamedTuple):
    equal: bool
    lhs: TPoly
    rhs: TPoly


def isf_factorization_check(g: OrderedGraph) -> FactorizationReport:
    """Compare the enumerated t-polynomial against the product formula.

    The right-hand side is the expansion of
        prod_{j=1..n} ( t + sum_{i<j, (i,j) in E} x_(i,j) ),
    which must coincide with the enumeration for every input.
    """
    lhs = isf_tpoly(g)
    coeffs = [MultiPoly.one()]
    for j in range(1, g.n + 1):
        const = MultiPoly({((i, j),): 1 for i in g.smaller_neighbors(j)})
        nxt = [MultiPoly.zero()] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d + 1] = nxt[d + 1] + c
            nxt[d] = nxt[d] + c * const
        coeffs = nxt
    rhs = TPoly(coeffs)
    return FactorizationReport(lhs == rhs, lhs, rhs)


def strong_logconcavity_check(g: OrderedGraph, p: int, q: int) -> NonnegReport:
    """Nonnegativity of a_p*a_q - a_{p-1}*a_{q+1} (coefficientwise)."""
    if not 0 < p <= q < g.n:
        raise IndexViolation(f"need 0 < p <= q < n={g.n}, got p={p}, q={q}")
    diff = a_poly(g, p) * a_poly(g, q) - a_poly(g, p - 1) * a_poly(g, q + 1)
    return diff.nonneg_report()

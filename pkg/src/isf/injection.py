"""The local injection on pairs of increasing spanning forests.

Given increasing spanning forests (A, B) with component counts k < l, a
vertex j is selected from the symmetric difference of the component-minima
sets through the subset injection, and the last edge on the path (inside
A) from the minimum of j's component to j is moved from A to B.  Both
outputs are again increasing, component counts shift by (+1, -1), and the
map is injective.  The full trace of intermediate quantities is returned
so tests and the CLI can expose each step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .brackets import phi
from .errors import NotIncreasing, NotInGraph, SizeViolation
from .graphs import Forest, OrderedGraph, component_minima, is_increasing, orient
from .enumeration import enumerate_if


def select_j(m_a, m_b, successor=phi) -> int:
    """The vertex singled out by phi inside m(A) symmetric-difference m(B)."""
    m_a, m_b = frozenset(m_a), frozenset(m_b)
    if len(m_a) >= len(m_b):
        raise SizeViolation(
            f"need |m(A)| < |m(B)|, got {len(m_a)} >= {len(m_b)}"
        )
    (j,) = successor(m_a ^ m_b, m_a - m_b) - (m_a - m_b)
    return j


@dataclass(frozen=True)
class PsiTrace:
    """Everything produced by one application of the edge-moving map."""

    mA: frozenset
    mB: frozenset
    sym_diff: frozenset
    j: int
    A_comp: frozenset
    B_comp: frozenset
    i0: int
    e: tuple
    A_out: Forest
    B_out: Forest

    def to_json(self) -> dict:
        return {
            "mA": sorted(self.mA),
            "mB": sorted(self.mB),
            "sym_diff": sorted(self.sym_diff),
            "j": self.j,
            "A_comp": sorted(self.A_comp),
            "B_comp": sorted(self.B_comp),
            "i0": self.i0,
            "e": list(self.e),
            "A_out": self.A_out.to_json(),
            "B_out": self.B_out.to_json(),
        }


def _component_of(f: Forest, v: int) -> frozenset:
    adj = {u: [] for u in range(1, f.n + 1)}
    for i, j in f.edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def _validate_pair(g: OrderedGraph, f: Forest, name: str):
    if f.n != g.n:
        raise NotInGraph(f"forest {name} has n={f.n}, graph has n={g.n}")
    extra = f.edges - g.edges
    if extra:
        raise NotInGraph(f"forest {name} uses non-graph edges {sorted(extra)}")
    if not is_increasing(f):
        raise NotIncreasing(f"forest {name} is not increasing")


def psi(g: OrderedGraph, a: Forest, b: Forest, successor=phi) -> PsiTrace:
    """Move one edge of A to B; requires components(A) < components(B)."""
    _validate_pair(g, a, "A")
    _validate_pair(g, b, "B")
    m_a, m_b = component_minima(a), component_minima(b)
    if len(m_a) >= len(m_b):
        raise SizeViolation(
            f"need components(A) < components(B), got {len(m_a)} >= {len(m_b)}"
        )
    j = select_j(m_a, m_b, successor=successor)
    a_comp = _component_of(a, j)
    b_comp = _component_of(b, j)
    i0 = min(a_comp)
    parent = orient(a).parent[j]  # exists: j is not a minimum of A
    e = (parent, j)
    a_out = Forest(a.n, a.edges - {e})
    b_out = Forest(b.n, b.edges | {e})
    trace = PsiTrace(
        mA=m_a, mB=m_b, sym_diff=m_a ^ m_b, j=j, A_comp=a_comp,
        B_comp=b_comp, i0=i0, e=e, A_out=a_out, B_out=b_out,
    )
    # bookkeeping the injectivity proof relies on; cheap, so always checked
    assert j in m_b - m_a and j == min(b_comp)
    assert e in a.edges and e not in b.edges
    assert component_minima(a_out) == m_a | {j}
    assert component_minima(b_out) == m_b - {j}
    assert is_increasing(a_out) and is_increasing(b_out)
    return trace


class PsiReport(NamedTuple):
    total_pairs: int
    injective: bool
    local: bool
    weight_preserving: bool
    collisions: list

    def to_json(self) -> dict:
        return {
            "total_pairs": self.total_pairs,
            "injective": self.injective,
            "local": self.local,
            "weight_preserving": self.weight_preserving,
            "collisions": [
                [a.to_json(), b.to_json()] for pairs in self.collisions
                for (a, b) in pairs
            ],
        }


def verify_psi(g: OrderedGraph, k: int, l: int, successor=phi) -> PsiReport:
    """Exhaustively apply psi to IF_k x IF_l and check all its contracts."""
    if not 0 <= k < l <= g.n:
        raise SizeViolation(f"need 0 <= k < l <= n={g.n}, got k={k}, l={l}")
    images: dict = {}
    collisions = []
    local = True
    weight_preserving = True
    total = 0
    for a in enumerate_if(g, k):
        for b in enumerate_if(g, l):
            total += 1
            tr = psi(g, a, b, successor=successor)
            e = tr.e
            if not (
                e in a.edges
                and e not in b.edges
                and tr.A_out.edges == a.edges - {e}
                and tr.B_out.edges == b.edges | {e}
            ):
                local = False
            before = sorted(list(a.edges) + list(b.edges))
            after = sorted(list(tr.A_out.edges) + list(tr.B_out.edges))
            if before != after:
                weight_preserving = False
            key = (tr.A_out.edges, tr.B_out.edges)
            if key in images:
                collisions.append([images[key], (a, b)])
            else:
                images[key] = (a, b)
    return PsiReport(total, not collisions, local, weight_preserving, collisions)

"""Vertex-ordered simple graphs and spanning forests.

Vertices are the integers 1..n with their natural order.  Edges are stored
as pairs (i, j) with i < j.  A Forest always carries its ambient vertex
count n and is spanning by convention: isolated vertices are singleton
components.  Acyclicity is validated with union-find at construction time;
invalid edge sets are rejected, never repaired.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CyclicInput, InputError


class UnionFind:
    """Disjoint sets over 1..n with path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y; False if they were already merged."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx > ry:
            rx, ry = ry, rx
        # keep the smaller label as representative so roots are minima
        self.parent[ry] = rx
        return True


def _validated_edges(n: int, edges) -> frozenset:
    out = set()
    for e in edges:
        e = tuple(e)
        if len(e) != 2 or not all(isinstance(v, int) for v in e):
            raise InputError(f"malformed edge {e!r}")
        i, j = e
        if not (1 <= i < j <= n):
            raise InputError(
                f"edge ({i},{j}) violates 1 <= i < j <= n with n={n}"
            )
        out.add((i, j))
    return frozenset(out)


@dataclass(frozen=True)
class OrderedGraph:
    """Simple graph on vertices 1..n with the natural total order."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be >= 0, got {self.n}")
        object.__setattr__(self, "edges", _validated_edges(self.n, self.edges))

    def smaller_neighbors(self, j: int) -> list:
        """Neighbors i of j with i < j, sorted increasing."""
        return sorted(i for (i, jj) in self.edges if jj == j)

    def neighbors(self, v: int) -> set:
        return {j if i == v else i for (i, j) in self.edges if v in (i, j)}

    @property
    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}

    @classmethod
    def from_json(cls, obj: dict) -> "OrderedGraph":
        if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
            raise InputError("graph JSON must be {'n': int, 'edges': [[i,j],...]}")
        return cls(obj["n"], frozenset(tuple(e) for e in obj["edges"]))


@dataclass(frozen=True)
class Forest:
    """Acyclic edge set over the ambient vertex set 1..n (spanning)."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be >= 0, got {self.n}")
        edges = _validated_edges(self.n, self.edges)
        object.__setattr__(self, "edges", edges)
        uf = UnionFind(self.n)
        for i, j in sorted(edges):
            if not uf.union(i, j):
                raise CyclicInput(f"edge ({i},{j}) closes a circuit")

    @property
    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def sort_key(self) -> tuple:
        return tuple(self.sorted_edges)

    def component_count(self) -> int:
        return self.n - len(self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}

    @classmethod
    def from_json(cls, obj: dict) -> "Forest":
        if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
            raise InputError("forest JSON must be {'n': int, 'edges': [[i,j],...]}")
        return cls(obj["n"], frozenset(tuple(e) for e in obj["edges"]))


@dataclass(frozen=True)
class Orientation:
    """A forest rooted at component minima.

    parent maps every non-root vertex to its parent; roots is the set of
    component minima; children lists are sorted increasing.
    """

    parent: dict
    roots: frozenset
    children: dict

    def branch(self, v: int) -> frozenset:
        """B(v): v together with all of its descendants."""
        out = []
        stack = [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self.children.get(u, ()))
        return frozenset(out)


def component_minima(f: Forest) -> frozenset:
    """m(f): the set of minimum vertices of the components of f."""
    uf = UnionFind(f.n)
    for i, j in f.edges:
        uf.union(i, j)
    return frozenset(v for v in range(1, f.n + 1) if uf.find(v) == v)


def orient(f: Forest) -> Orientation:
    """Root every component of f at its minimum vertex."""
    adj = {v: [] for v in range(1, f.n + 1)}
    for i, j in f.edges:
        adj[i].append(j)
        adj[j].append(i)
    roots = component_minima(f)
    parent: dict = {}
    children = {v: [] for v in range(1, f.n + 1)}
    for r in sorted(roots):
        stack = [r]
        seen = {r}
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    children[u].append(w)
                    stack.append(w)
    return Orientation(
        parent=parent,
        roots=roots,
        children={v: tuple(sorted(ws)) for v, ws in children.items()},
    )


def is_increasing(f: Forest) -> bool:
    """True iff labels increase along every root-to-leaf path."""
    return all(p < v for v, p in orient(f).parent.items())


def complete_graph(n: int) -> OrderedGraph:
    return OrderedGraph(
        n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    )

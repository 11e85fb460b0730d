"""Subset injection by parenthesis matching.

For a ground set Y (sorted increasingly) and X a subset of Y with
|X| < |Y|/2, write an open bracket at each position whose element lies in
X and a close bracket elsewhere, match brackets left to right with a
stack, and flip the rightmost unmatched close bracket to obtain a superset
X' of X with one more element.  This is the successor step of a symmetric
chain decomposition of the Boolean lattice, so it is injective for every
fixed (|Y|, |X|).

A second instantiation running the same algorithm over the reversed
ground order is provided; the edge-moving injection must work with either,
since it may rely only on injectivity and X being contained in its image.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotASubset, NotInImage, SizeViolation


@dataclass(frozen=True)
class BracketState:
    """Bracket string for (Y, X) with its matching.

    Positions are 1-based into `elements`.  After stack matching, every
    unmatched close position precedes every unmatched open position.
    """

    elements: tuple          # ground set in traversal order
    string: tuple            # "(" / ")" per position
    matched: frozenset       # frozenset of (open_pos, close_pos) pairs
    unmatched_close: tuple   # positions, increasing
    unmatched_open: tuple    # positions, increasing

    @classmethod
    def build(cls, elements, members) -> "BracketState":
        elements = tuple(elements)
        string = tuple("(" if e in members else ")" for e in elements)
        stack = []
        matched = set()
        unmatched_close = []
        for pos, ch in enumerate(string, start=1):
            if ch == "(":
                stack.append(pos)
            elif stack:
                matched.add((stack.pop(), pos))
            else:
                unmatched_close.append(pos)
        state = cls(
            elements=elements,
            string=string,
            matched=frozenset(matched),
            unmatched_close=tuple(unmatched_close),
            unmatched_open=tuple(stack),
        )
        # chain invariant: closes before opens among unmatched positions
        assert not state.unmatched_close or not state.unmatched_open or (
            state.unmatched_close[-1] < state.unmatched_open[0]
        )
        return state


def _as_ground(ground) -> tuple:
    elems = tuple(sorted(ground))
    if len(set(elems)) != len(elems):
        raise NotASubset(f"ground set has repeated elements: {ground!r}")
    return elems


def _check_subset(ground: tuple, subset) -> frozenset:
    sub = frozenset(subset)
    if not sub <= set(ground):
        raise NotASubset(f"{sorted(sub)} is not a subset of {list(ground)}")
    return sub


def _bracket_successor(elements: tuple, sub: frozenset) -> frozenset:
    if 2 * len(sub) >= len(elements):
        raise SizeViolation(
            f"need |X| < |Y|/2, got |X|={len(sub)}, |Y|={len(elements)}"
        )
    state = BracketState.build(elements, sub)
    pos = state.unmatched_close[-1]
    return sub | {elements[pos - 1]}


def _bracket_predecessor(elements: tuple, sub: frozenset) -> frozenset:
    state = BracketState.build(elements, sub)
    if not state.unmatched_open:
        raise NotInImage(f"{sorted(sub)} has no unmatched open bracket")
    pos = state.unmatched_open[0]
    return sub - {elements[pos - 1]}


def phi(ground, subset) -> frozenset:
    """The canonical injection X -> X' with X a proper subset of X'."""
    elements = _as_ground(ground)
    return _bracket_successor(elements, _check_subset(elements, subset))


def phi_inverse(ground, subset) -> frozenset:
    """Invert phi by flipping the leftmost unmatched open bracket.

    Raises NotInImage when the candidate preimage does not map back.
    """
    elements = _as_ground(ground)
    sub = _check_subset(elements, subset)
    pre = _bracket_predecessor(elements, sub)
    try:
        image = _bracket_successor(elements, pre)
    except SizeViolation:
        raise NotInImage(f"{sorted(sub)} is not in the image of phi") from None
    if image != sub:
        raise NotInImage(f"{sorted(sub)} is not in the image of phi")
    return pre


def phi_reversed(ground, subset) -> frozenset:
    """Alternative valid injection: same matching over the reversed order."""
    elements = tuple(reversed(_as_ground(ground)))
    return _bracket_successor(elements, _check_subset(elements, subset))


def subset_pair_map(n: int, x, y) -> tuple:
    """Move one element of Y\\X into X, injectively over pairs.

    Returns (x_new, y_new, i) with x_new = X u {i}, y_new = Y \\ {i} and i
    chosen by phi applied to X\\Y inside the symmetric difference.  Sizes
    shift by (+1, -1) and the multiset union of the pair is preserved.
    """
    universe = range(1, n + 1)
    xs = _check_subset(tuple(universe), x)
    ys = _check_subset(tuple(universe), y)
    if len(xs) >= len(ys):
        raise SizeViolation(f"need |X| < |Y|, got {len(xs)} >= {len(ys)}")
    delta = xs ^ ys
    (i,) = phi(delta, xs - ys) - (xs - ys)
    return (xs | {i}, ys - {i}, i)

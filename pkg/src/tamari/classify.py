"""Pattern-avoidance classifiers on interval-posets and intervals.

Four families are detected here:

* exceptional: the Hasse diagram has no element covering both a smaller
  and a larger element (in bijection with noncrossing trees);
* modern: the full relation has no two relations pointing into the same
  middle element from both sides (exactly the posets whose rise is again
  an interval-poset);
* new: the image of the rise of a modern poset, equivalently the posets
  of intervals with no grafting decomposition;
* infinitely modern: every iterated rise stays an interval-poset,
  detected through the (ir, dr) statistic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .posets import IntervalPoset, Pair
from .trees import (
    TamariInterval,
    Tree,
)


def hasse(p: IntervalPoset) -> frozenset[Pair]:
    """Cover pairs: the relation minus all transitively implied pairs."""
    rel = p.relations
    return frozenset(
        (a, b)
        for (a, b) in rel
        if not any((a, c) in rel and (c, b) in rel for c in range(1, p.n + 1))
    )


def is_exceptional(p: IntervalPoset) -> bool:
    """No y covers both some x < y and some z > y in the Hasse diagram."""
    covers = hasse(p)
    for y in range(1, p.n + 1):
        ups = [b for (a, b) in covers if a == y]
        if any(b < y for b in ups) and any(b > y for b in ups):
            return False
    return True


def is_modern(p: IntervalPoset) -> bool:
    """No x <| y and z <| y with x < y < z, over all relations (not just
    covers, unlike :func:`is_exceptional`)."""
    rel = p.relations
    for (x, y) in rel:
        if x < y and any((z, y) in rel for z in range(y + 1, p.n + 1)):
            return False
    return True


def is_new_ip(p: IntervalPoset) -> bool:
    """No increasing relation from 1, no decreasing relation from n, and no
    pair i+1 <| j+1 (increasing) with j <| i (decreasing), i < j."""
    rel = p.relations
    if any(x == 1 and x < y for (x, y) in rel):
        return False
    if any(x == p.n and x > y for (x, y) in rel):
        return False
    for (j, i) in rel:
        if i < j and (i + 1, j + 1) in rel:
            return False
    return True


@dataclass(frozen=True)
class StatPair:
    """Positions of the first length-1 increasing relation (ir) and the
    last length-1 decreasing relation (dr), with conventions ir = n and
    dr = 1 when the respective relations are absent."""

    ir: int
    dr: int


def stat(p: IntervalPoset) -> StatPair:
    incs = [k for (k, l) in p.relations if l == k + 1]
    decs = [i for (i, j) in p.relations if j == i - 1]
    return StatPair(ir=min(incs) if incs else p.n, dr=max(decs) if decs else 1)


def is_infinitely_modern(p: IntervalPoset) -> bool:
    s = stat(p)
    return s.dr <= s.ir


def avoids_long_crossing(p: IntervalPoset) -> bool:
    """No w <| x and z <| y with w < x < y < z, as literally stated.

    Not authoritative: the literal strict pattern misses posets like
    {1 <| 2, 3 <| 2} whose first rise already fails, so infinite
    modernity is decided by :func:`is_infinitely_modern` instead.
    """
    rel = p.relations
    for (w, x) in rel:
        if w < x:
            for (z, y) in rel:
                if x < y < z:
                    return False
    return True


def leaf_spans(t: Tree) -> set[tuple[int, int]]:
    """Leaf intervals [i, j] of all nonempty subtrees, leaves numbered
    1..size+1 left to right."""
    spans: set[tuple[int, int]] = set()

    def go(node: Tree, lo: int) -> int:
        # returns index of the first leaf right of this subtree
        if node is None:
            return lo + 1
        mid = go(node.left, lo)
        hi = go(node.right, mid)
        spans.add((lo, hi - 1))
        return hi

    go(t, 1)
    return spans


def is_new_interval(interval: TamariInterval) -> bool:
    """Grafting-decomposition search: the interval is new iff no pair of
    subtrees of lower and upper covers the same leaf interval other than
    the full one.  Independent of :func:`is_new_ip`."""
    n = interval.size
    shared = leaf_spans(interval.lower) & leaf_spans(interval.upper)
    shared.discard((1, n + 1))
    return not shared


def nice_shape(interval: TamariInterval) -> tuple[Tree, Tree] | None:
    """Witness (S1, T1) with lower = Y o_1 S1 and upper = Y o_2 T1, when the
    bounds have that shape; the interval is new iff additionally
    tamari_leq(S1, T1)."""
    low, up = interval.lower, interval.upper
    if low is None or up is None:
        return None
    if low.right is not None or up.left is not None:
        return None
    return (low.left, up.right)

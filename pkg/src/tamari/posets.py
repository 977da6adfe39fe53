"""Interval-posets and the bijection with Tamari intervals.

An interval-poset of size n is a poset on {1..n} whose increasing and
decreasing relations each satisfy a convexity condition:

  (1) a <| c with a < c forces b <| c for every a < b < c;
  (2) c <| a with a < c forces b <| a for every a < b < c.

An interval [S, T] corresponds to the poset Dec(S) | Inc(T).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .trees import (
    BinaryTree,
    TamariInterval,
    Tree,
    dec_relations,
    enumerate_trees,
    inc_relations,
    tree_relations,
)

Pair = tuple[int, int]


class InvalidIntervalPoset(ValueError):
    """Base class for validation failures."""


class NotAPoset(InvalidIntervalPoset):
    """The transitive closure is not antisymmetric; carries a witness cycle."""

    def __init__(self, cycle: tuple[int, ...]):
        self.cycle = cycle
        super().__init__(f"relation is not antisymmetric, cycle {cycle}")


class IntervalConditionViolated(InvalidIntervalPoset):
    """An interval condition fails; carries the witness triple a < b < c."""

    def __init__(self, a: int, b: int, c: int, condition: int):
        self.witness = (a, b, c)
        self.condition = condition
        super().__init__(
            f"interval condition ({condition}) fails on triple ({a},{b},{c})"
        )


def transitive_closure(pairs: frozenset[Pair]) -> frozenset[Pair]:
    succ: dict[int, set[int]] = {}
    for (a, b) in pairs:
        succ.setdefault(a, set()).add(b)
    closure = set()
    for start in succ:
        seen: set[int] = set()
        stack = list(succ[start])
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(succ.get(v, ()))
        closure.update((start, v) for v in seen if v != start)
    return frozenset(closure)


@dataclass(frozen=True)
class RangeRelation:
    """An arbitrary relation on {1..n}, split by direction only on demand.

    Deliberately weaker than an interval-poset: the rise of an
    interval-poset need not be one, so iterating rises requires this
    general carrier.
    """

    n: int
    pairs: frozenset[Pair]

    def __post_init__(self) -> None:
        for (x, y) in self.pairs:
            if not (1 <= x <= self.n and 1 <= y <= self.n) or x == y:
                raise ValueError(f"pair ({x},{y}) out of range for size {self.n}")

    @property
    def inc(self) -> frozenset[Pair]:
        return frozenset(p for p in self.pairs if p[0] < p[1])

    @property
    def dec(self) -> frozenset[Pair]:
        return frozenset(p for p in self.pairs if p[0] > p[1])


@dataclass(frozen=True)
class IntervalPoset:
    """A validated interval-poset; ``relations`` is the full transitive
    relation, pairs (x, y) meaning x <| y, reflexive pairs omitted."""

    n: int
    relations: frozenset[Pair]

    def __post_init__(self) -> None:
        _check_axioms(self.n, self.relations)
        if transitive_closure(self.relations) != self.relations:
            raise InvalidIntervalPoset("relation is not transitively closed")

    @property
    def inc(self) -> frozenset[Pair]:
        return frozenset(p for p in self.relations if p[0] < p[1])

    @property
    def dec(self) -> frozenset[Pair]:
        return frozenset(p for p in self.relations if p[0] > p[1])

    def leq(self, a: int, b: int) -> bool:
        return a == b or (a, b) in self.relations

    def sort_key(self) -> tuple:
        return (self.n, sorted(self.inc), sorted(self.dec))

    def as_relation(self) -> RangeRelation:
        return RangeRelation(self.n, self.relations)


def _find_cycle(pairs: frozenset[Pair]) -> tuple[int, ...]:
    for (a, b) in pairs:
        if (b, a) in pairs:
            return (a, b, a)
    raise AssertionError("no 2-cycle found in non-antisymmetric closure")


def _check_axioms(n: int, closed: frozenset[Pair]) -> None:
    if any((y, x) in closed for (x, y) in closed):
        raise NotAPoset(_find_cycle(closed))
    for (x, y) in sorted(closed):
        if x < y:  # condition (1): a <| c forces b <| c for a < b < c
            for b in range(x + 1, y):
                if (b, y) not in closed:
                    raise IntervalConditionViolated(x, b, y, 1)
        else:  # condition (2): c <| a forces b <| a for a < c, a < b < c
            for b in range(y + 1, x):
                if (b, y) not in closed:
                    raise IntervalConditionViolated(y, b, x, 2)


def validate(rel: RangeRelation) -> IntervalPoset:
    """Close ``rel`` transitively and check the interval-poset axioms.

    Raises :class:`NotAPoset` or :class:`IntervalConditionViolated` with a
    minimal witness; on success returns the closed poset.
    """
    return IntervalPoset(rel.n, transitive_closure(rel.pairs))


def is_valid(rel: RangeRelation) -> bool:
    try:
        validate(rel)
    except InvalidIntervalPoset:
        return False
    return True


def make_poset(n: int, pairs) -> IntervalPoset:
    """Build an interval-poset from generating pairs (closure is taken)."""
    return validate(RangeRelation(n, frozenset(pairs)))


def tree_poset(t: Tree) -> IntervalPoset:
    """The poset induced by a nonempty tree under its in-order labels."""
    from .trees import size as tree_size

    return IntervalPoset(tree_size(t), tree_relations(t))


def from_interval(interval: TamariInterval) -> IntervalPoset:
    """Dec(lower) | Inc(upper); the Chatel-Pons encoding of the interval."""
    pairs = dec_relations(interval.lower) | inc_relations(interval.upper)
    return validate(RangeRelation(interval.size, pairs))


def _forest(n: int, pairs: frozenset[Pair]) -> tuple[dict[int, list[int]], list[int]]:
    """Hasse forest of the relation restricted to ``pairs``.

    Returns (children by parent, roots), children and roots sorted
    ascending.  ``pairs`` must be all-increasing or all-decreasing.
    """
    children: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    roots = []
    for v in range(1, n + 1):
        ups = [y for (x, y) in pairs if x == v]
        if not ups:
            roots.append(v)
            continue
        # the elements above v form a chain; the cover is its minimum
        parent = next(y for y in ups if all(u == y or (y, u) in pairs for u in ups))
        children[parent].append(v)
    for v in children:
        children[v].sort()
    return children, roots


def _binarize_inc(roots: list[int], children: dict[int, list[int]]) -> Tree:
    # increasing forest -> upper tree: son becomes left son,
    # right brother becomes right son
    if not roots:
        return None
    first, rest = roots[0], roots[1:]
    return BinaryTree(
        _binarize_inc(children[first], children),
        _binarize_inc(rest, children),
    )


def _binarize_dec(roots: list[int], children: dict[int, list[int]]) -> Tree:
    # decreasing forest -> lower tree: son becomes right son,
    # left brother becomes left son
    if not roots:
        return None
    last, rest = roots[-1], roots[:-1]
    return BinaryTree(
        _binarize_dec(rest, children),
        _binarize_dec(children[last], children),
    )


def to_interval(p: IntervalPoset) -> TamariInterval:
    """Inverse of :func:`from_interval`."""
    dec_children, dec_roots = _forest(p.n, p.dec)
    inc_children, inc_roots = _forest(p.n, p.inc)
    lower = _binarize_dec(dec_roots, dec_children)
    upper = _binarize_inc(inc_roots, inc_children)
    return TamariInterval(lower, upper)


def enumerate_interval_posets(n: int) -> list[IntervalPoset]:
    """All interval-posets of size n, ordered lexicographically on the
    (sorted inc, sorted dec) pair lists.

    Generated by mapping every comparable tree pair through
    :func:`from_interval`; this doubles as the oracle for the counts.
    """
    if n < 1:
        raise ValueError("size must be at least 1")
    trees = enumerate_trees(n)
    decs = [dec_relations(t) for t in trees]
    out = []
    for i, lower in enumerate(trees):
        for j, upper in enumerate(trees):
            if decs[i] <= decs[j]:
                out.append(from_interval(TamariInterval(lower, upper)))
    out.sort(key=IntervalPoset.sort_key)
    return out


def mirror_poset(p: IntervalPoset) -> IntervalPoset:
    """a <| b in the result iff (n+1-a) <| (n+1-b) in ``p``; an involution
    matching the left/right mirror of both interval bounds."""
    n = p.n
    pairs = frozenset((n + 1 - a, n + 1 - b) for (a, b) in p.relations)
    return IntervalPoset(n, pairs)


def interval_members(p: IntervalPoset) -> list[Tree]:
    """All trees lying in the interval encoded by ``p``, by Dec-inclusion."""
    interval = to_interval(p)
    low, high = dec_relations(interval.lower), dec_relations(interval.upper)
    return [
        t for t in enumerate_trees(p.n) if low <= dec_relations(t) <= high
    ]


def linear_extensions(n: int, pairs: frozenset[Pair]) -> list[tuple[int, ...]]:
    """All total orders extending the relation, in lexicographic order.

    Raises :class:`NotAPoset` if the closure has a cycle.
    """
    closed = transitive_closure(pairs)
    if any((y, x) in closed for (x, y) in closed):
        raise NotAPoset(_find_cycle(closed))
    below: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for (x, y) in closed:
        below[y].add(x)
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: set[int]) -> None:
        if not remaining:
            out.append(tuple(prefix))
            return
        for v in sorted(remaining):
            if below[v] <= set(prefix):
                prefix.append(v)
                extend(prefix, remaining - {v})
                prefix.pop()

    extend([], set(range(1, n + 1)))
    return out


# -- serialization ----------------------------------------------------------

def poset_to_obj(p: IntervalPoset | RangeRelation) -> dict:
    # pairs mean first <| second in both lists
    return {
        "size": p.n,
        "inc": sorted([a, b] for (a, b) in p.inc),
        "dec": sorted([b, a] for (b, a) in p.dec),
    }


def poset_to_json(p: IntervalPoset | RangeRelation) -> str:
    return json.dumps(poset_to_obj(p))


def relation_from_obj(obj: dict) -> RangeRelation:
    pairs = {(a, b) for a, b in obj.get("inc", [])}
    pairs |= {(b, a) for b, a in obj.get("dec", [])}
    return RangeRelation(obj["size"], frozenset(pairs))


def poset_from_json(text: str) -> IntervalPoset:
    return validate(relation_from_obj(json.loads(text)))

"""Planar binary trees, the Tamari order and grafting.

A tree is either ``None`` (a leaf, size 0) or a :class:`BinaryTree` node
holding an optional left and right subtree.  Vertices are implicitly
labelled 1..n by in-order traversal (the unique binary-search-tree
labelling), and all relation-producing operations use those labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

Tree = Optional["BinaryTree"]


@dataclass(frozen=True)
class BinaryTree:
    """An internal node of a planar binary tree; ``None`` children are leaves."""

    left: Tree = None
    right: Tree = None


Y = BinaryTree()  # the unique tree of size 1


def size(t: Tree) -> int:
    if t is None:
        return 0
    return 1 + size(t.left) + size(t.right)


def left_comb(n: int) -> Tree:
    t: Tree = None
    for _ in range(n):
        t = BinaryTree(left=t)
    return t


def right_comb(n: int) -> Tree:
    t: Tree = None
    for _ in range(n):
        t = BinaryTree(right=t)
    return t


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All planar binary trees of size ``n``.

    Canonical order: by size of the left subtree, then recursively on the
    left subtree, then on the right one.  Length is the Catalan number.
    """
    if n < 0:
        raise ValueError("size must be non-negative")
    if n == 0:
        return (None,)
    out: list[Tree] = []
    for k in range(n):
        for left in enumerate_trees(k):
            for right in enumerate_trees(n - 1 - k):
                out.append(BinaryTree(left, right))
    return tuple(out)


def _relations(t: Tree, lo: int) -> tuple[int, frozenset[tuple[int, int]]]:
    """Relations i <| j of the subtree ``t`` whose in-order labels start at ``lo``.

    Returns (next unused label, set of pairs (i, j) meaning i <| j).
    """
    if t is None:
        return lo, frozenset()
    mid, left_rel = _relations(t.left, lo)
    hi, right_rel = _relations(t.right, mid + 1)
    here = frozenset((i, mid) for i in range(lo, hi) if i != mid)
    return hi, left_rel | right_rel | here


def tree_relations(t: Tree) -> frozenset[tuple[int, int]]:
    """The induced relation of ``t``: (i, j) present iff vertex i lies in the
    subtree rooted at j.  Reflexive pairs are omitted."""
    if t is None:
        raise ValueError("the empty tree induces no labelled poset")
    _, rel = _relations(t, 1)
    return rel


def dec_relations(t: Tree) -> frozenset[tuple[int, int]]:
    """Decreasing relations of ``t``: pairs (b, a) with a < b and b <| a."""
    return frozenset((x, y) for (x, y) in tree_relations(t) if x > y)


def inc_relations(t: Tree) -> frozenset[tuple[int, int]]:
    """Increasing relations of ``t``: pairs (a, b) with a < b and a <| b."""
    return frozenset((x, y) for (x, y) in tree_relations(t) if x < y)


def tamari_leq(t1: Tree, t2: Tree) -> bool:
    """Tamari comparison via inclusion of decreasing relations."""
    if size(t1) != size(t2):
        raise ValueError("trees must have equal size")
    if size(t1) == 0:
        return True
    return dec_relations(t1) <= dec_relations(t2)


def covers(t: Tree) -> list[Tree]:
    """All trees obtained from ``t`` by one left rotation ((A B) C) -> (A (B C))."""
    if t is None:
        return []
    out: list[Tree] = []
    if t.left is not None:
        out.append(BinaryTree(t.left.left, BinaryTree(t.left.right, t.right)))
    out.extend(BinaryTree(s, t.right) for s in covers(t.left))
    out.extend(BinaryTree(t.left, s) for s in covers(t.right))
    return out


def graft(t: Tree, i: int, s: Tree) -> Tree:
    """Graft the root of ``s`` on the i-th leaf of ``t`` (leaves are numbered
    1..size(t)+1 from left to right)."""
    n = size(t)
    if not 1 <= i <= n + 1:
        raise ValueError(f"leaf index {i} out of range 1..{n + 1}")

    def go(node: Tree, lo: int) -> Tree:
        # leaves of this subtree are numbered lo..lo+size(node)
        if node is None:
            return s
        k = size(node.left)
        if i <= lo + k:
            return BinaryTree(go(node.left, lo), node.right)
        return BinaryTree(node.left, go(node.right, lo + k + 1))

    return go(t, 1)


def mirror(t: Tree) -> Tree:
    """Left/right reflection."""
    if t is None:
        return None
    return BinaryTree(mirror(t.right), mirror(t.left))


@dataclass(frozen=True)
class TamariInterval:
    """An interval [lower, upper] of the Tamari lattice."""

    lower: Tree
    upper: Tree

    def __post_init__(self) -> None:
        if not tamari_leq(self.lower, self.upper):
            raise ValueError("lower bound is not below upper bound")

    @property
    def size(self) -> int:
        return size(self.lower)


# -- serialization ----------------------------------------------------------

def tree_to_text(t: Tree) -> str:
    """`L` for a leaf, `(left right)` for a node."""
    if t is None:
        return "L"
    return f"({tree_to_text(t.left)} {tree_to_text(t.right)})"


def tree_from_text(text: str) -> Tree:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of tree expression")
        tok = tokens[pos]
        pos += 1
        if tok == "L":
            return None
        if tok != "(":
            raise ValueError(f"unexpected token {tok!r}")
        left = parse()
        right = parse()
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ValueError("missing closing parenthesis")
        pos += 1
        return BinaryTree(left, right)

    t = parse()
    if pos != len(tokens):
        raise ValueError("trailing tokens in tree expression")
    return t


def tree_to_obj(t: Tree):
    """Nested-array form; null is a leaf."""
    if t is None:
        return None
    return [tree_to_obj(t.left), tree_to_obj(t.right)]


def tree_from_obj(obj) -> Tree:
    if obj is None:
        return None
    left, right = obj
    return BinaryTree(tree_from_obj(left), tree_from_obj(right))


def tree_to_json(t: Tree) -> str:
    return json.dumps({"tree": tree_to_obj(t)})


def tree_from_json(text: str) -> Tree:
    return tree_from_obj(json.loads(text)["tree"])


def iter_subtrees(t: Tree) -> Iterator[Tree]:
    """All nonempty subtrees of ``t``, including ``t`` itself."""
    if t is None:
        return
    yield t
    yield from iter_subtrees(t.left)
    yield from iter_subtrees(t.right)

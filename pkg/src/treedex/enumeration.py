"""Isomorphism-free generation of all free trees on n vertices.

The generator walks canonical level sequences with a successor
function: starting from the center-rooted path it repeatedly takes the
next rooted level sequence and skips (by a computed jump, not by
filtering) any sequence that is not the canonical rooting of its free
tree. One representative per isomorphism class is produced in a fixed
order, path first, star last, with no dedup set.

A Prüfer-decode generator over all n^(n-2) labeled trees is included as
the independent cross-check oracle for small n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .bounds import FamilyConstraint
from .trees import Tree, canonical_code, structural_profile

DEFAULT_MAX_N = 18


@dataclass(frozen=True)
class EnumerationTask:
    """A bounded enumeration request: size, optional family filter, cap."""

    n: int
    constraint: FamilyConstraint | None = None
    limit: int | None = None

    def __post_init__(self) -> None:
        if self.constraint is not None and self.constraint.n != self.n:
            raise ValueError("constraint size differs from task size")

    def run(self, max_n: int = DEFAULT_MAX_N):
        stream = (
            free_trees(self.n, max_n)
            if self.constraint is None
            else family_members(self.constraint, max_n)
        )
        for i, t in enumerate(stream):
            if self.limit is not None and i >= self.limit:
                return
            yield t


def _next_rooted(layout: list[int], p: int | None = None) -> list[int] | None:
    # Successor in the rooted level-sequence order; p forces the pivot.
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    out = list(layout)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_levels(layout: list[int]) -> tuple[list[int], list[int]]:
    # First root subtree (re-rooted at level 0) and the rest of the tree.
    m = next((i for i in range(2, len(layout)) if layout[i] == 1), len(layout))
    left = [layout[i] - 1 for i in range(1, m)]
    rest = [0] + layout[m:]
    return left, rest


def _next_free_canonical(candidate: list[int]) -> list[int] | None:
    # Return the candidate if it canonically represents a free tree,
    # otherwise jump directly to the next sequence that does.
    left, rest = _split_levels(candidate)
    left_h, rest_h = max(left), max(rest)
    if rest_h > left_h:
        return candidate
    if rest_h == left_h and (
        len(left) < len(rest) or (len(left) == len(rest) and left <= rest)
    ):
        return candidate
    p = len(left)
    successor = _next_rooted(candidate, p)
    if successor is not None and candidate[p] > 2:
        new_left, _ = _split_levels(successor)
        suffix = range(1, max(new_left) + 2)
        successor[-len(suffix):] = suffix
    return successor


def _tree_from_levels(levels: list[int]) -> Tree:
    latest: dict[int, int] = {}
    edges = []
    for i, lev in enumerate(levels):
        if i:
            edges.append((latest[lev - 1], i))
        latest[lev] = i
    return Tree(len(levels), tuple(edges))


def free_trees(n: int, max_n: int = DEFAULT_MAX_N):
    """Yield exactly one tree per isomorphism class of n-vertex trees.

    Deterministic order; pairwise distinct canonical codes. The cap
    guards against accidentally huge enumerations.
    """
    if not 2 <= n <= max_n:
        raise ValueError(f"n must be in 2..{max_n}")
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free_canonical(layout)
        if layout is None:
            return
        yield _tree_from_levels(layout)
        layout = _next_rooted(layout)


def family_members(c: FamilyConstraint, max_n: int = DEFAULT_MAX_N):
    """Members of PT/ST/BT(n, param) in free_trees order.

    For ST this is exactly the set of trees with n2 = n - k - 1.
    """
    for t in free_trees(c.n, max_n):
        profile = structural_profile(t)
        value = {"pt": profile.n1, "st": profile.k, "bt": profile.b}[c.kind]
        if value == c.param:
            yield t


def family_census(n: int, max_n: int = DEFAULT_MAX_N) -> dict[tuple[int, int, int], int]:
    """Counts of free trees per (n1, k, b) cell."""
    census: dict[tuple[int, int, int], int] = {}
    for t in free_trees(n, max_n):
        profile = structural_profile(t)
        key = (profile.n1, profile.k, profile.b)
        census[key] = census.get(key, 0) + 1
    return census


def _prufer_edges(seq: tuple[int, ...], n: int) -> tuple[tuple[int, int], ...]:
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for v in seq:
        edges.append((leaf, v))
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return tuple(edges)


def labeled_trees_prufer(n: int):
    """Every labeled tree on n vertices, decoded from its Prüfer sequence.

    n^(n-2) trees; the independent oracle behind the canonical generator.
    """
    if n < 2:
        raise ValueError("labeled trees require n >= 2")
    if n == 2:
        yield Tree(2, ((0, 1),))
        return
    for seq in product(range(n), repeat=n - 2):
        yield Tree(n, _prufer_edges(seq, n))


def free_tree_count_by_prufer(n: int) -> int:
    """Number of distinct canonical codes over all labeled trees."""
    return len({canonical_code(t) for t in labeled_trees_prufer(n)})

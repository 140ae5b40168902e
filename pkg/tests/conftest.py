"""Shared tree builders for the test suite."""

from functools import lru_cache

from treedex import Tree, free_trees


def path_tree(n: int) -> Tree:
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star_tree(n: int) -> Tree:
    return Tree(n, tuple((0, i) for i in range(1, n)))


def spider(*legs: int) -> Tree:
    """One branching vertex 0 with paths of the given lengths attached."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, tuple(edges))


def double_broom(p: int, q: int) -> Tree:
    """Adjacent vertices 0 and 1 with p and q pendants respectively."""
    edges = [(0, 1)]
    nxt = 2
    for _ in range(p):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(q):
        edges.append((1, nxt))
        nxt += 1
    return Tree(nxt, tuple(edges))


@lru_cache(maxsize=None)
def all_free_trees(n: int) -> tuple[Tree, ...]:
    return tuple(free_trees(n))


def trees_up_to(hi: int, lo: int = 2):
    for n in range(lo, hi + 1):
        yield from all_free_trees(n)


def is_caterpillar(t: Tree) -> bool:
    """Deleting all pendant vertices must leave a path (or nothing)."""
    internal = [v for v in range(t.n) if t.degrees[v] >= 2]
    if len(internal) <= 1:
        return True
    keep = set(internal)
    for v in internal:
        if sum(1 for w in t.adjacency[v] if w in keep) > 2:
            return False
    return True

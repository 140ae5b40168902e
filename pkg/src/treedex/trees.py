"""Tree structures, structural statistics, and canonical forms.

Vertices are dense 0-based integers. A Tree is immutable after
construction and every operation returns new values, so everything in
this module can be used from concurrent workers without locking.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class Tree:
    """Simple undirected tree on vertices 0..n-1.

    Edges are normalized to sorted (u, v) pairs in sorted order.
    Construction validates the tree invariants: exactly n-1 edges, no
    self-loops, no duplicates, connected.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        norm = tuple(sorted((u, v) if u <= v else (v, u) for u, v in self.edges))
        object.__setattr__(self, "edges", norm)
        _validate(self.n, norm)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(self.degrees)

    def path_between(self, u: int, v: int) -> tuple[int, ...]:
        """Vertices of the unique u-v path, endpoints included."""
        parent = {u: u}
        queue = deque([u])
        while queue and v not in parent:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        path.reverse()
        return tuple(path)

    def replace_edges(self, removed, added) -> "Tree":
        """New tree on the same vertex set with `removed` swapped for `added`."""
        drop = {(u, v) if u <= v else (v, u) for u, v in removed}
        kept = [e for e in self.edges if e not in drop]
        if len(kept) != len(self.edges) - len(drop):
            raise ValueError("edge to remove is not present")
        return Tree(self.n, tuple(kept) + tuple(added))

    def edge_text(self) -> str:
        """Serialize as edge-list text (one 'u v' line per edge)."""
        return "\n".join(f"{u} {v}" for u, v in self.edges)


def _validate(n: int, edges: tuple[tuple[int, int], ...]) -> None:
    if n < 1:
        raise ValueError("vertex count must be at least 1")
    seen = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex id out of range in edge ({u}, {v})")
        if (u, v) in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
    if len(edges) > n - 1:
        raise ValueError(f"cyclic: {len(edges)} edges on {n} vertices")
    if len(edges) < n - 1:
        raise ValueError(f"disconnected: only {len(edges)} edges on {n} vertices")
    if n == 1:
        return
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    reached = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in reached:
                reached.add(y)
                queue.append(y)
    if len(reached) != n:
        raise ValueError("disconnected: not all vertices reachable")


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing positive degrees with sum 2(n-1).

    Together with positivity the sum condition is exactly
    tree-realizability. The single-vertex tree is the degenerate (0,).
    """

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degs = tuple(sorted(self.degrees, reverse=True))
        object.__setattr__(self, "degrees", degs)
        n = len(degs)
        if n == 0:
            raise ValueError("empty degree sequence")
        if n == 1:
            if degs != (0,):
                raise ValueError("a single-vertex tree has degree sequence (0,)")
            return
        if degs[-1] < 1:
            raise ValueError("degrees must be positive")
        if sum(degs) != 2 * (n - 1):
            raise ValueError(
                f"degree sum {sum(degs)} != 2(n-1) = {2 * (n - 1)}: not tree-realizable"
            )

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)


@dataclass(frozen=True)
class StructuralProfile:
    """Degree census of a tree.

    n1 counts pendant vertices (degree 1), n2 degree-2 vertices, b
    branching vertices (degree >= 3); k = n - n2 - 1 is the segment
    count, cross-checked by segment_decomposition.
    """

    n: int
    degree_counts: tuple[tuple[int, int], ...]
    n1: int
    n2: int
    b: int
    k: int
    max_degree: int

    def count(self, degree: int) -> int:
        for d, c in self.degree_counts:
            if d == degree:
                return c
        return 0


def structural_profile(t: Tree) -> StructuralProfile:
    """Pendant/branching/segment statistics; requires n >= 2."""
    if t.n < 2:
        raise ValueError("structural profile requires n >= 2")
    counts = Counter(t.degrees)
    n1 = counts.get(1, 0)
    n2 = counts.get(2, 0)
    b = sum(c for d, c in counts.items() if d >= 3)
    return StructuralProfile(
        n=t.n,
        degree_counts=tuple(sorted(counts.items())),
        n1=n1,
        n2=n2,
        b=b,
        k=t.n - n2 - 1,
        max_degree=max(counts),
    )


def segment_decomposition(t: Tree) -> tuple[tuple[int, ...], ...]:
    """Maximal paths whose internal vertices all have degree 2.

    Endpoints are pendant or branching. Each segment is returned once,
    oriented from its smaller endpoint, and segments are sorted.
    """
    if t.n < 2:
        raise ValueError("segments require n >= 2")
    deg = t.degrees
    segments = []
    for start in range(t.n):
        if deg[start] == 2:
            continue
        for first in t.adjacency[start]:
            path = [start, first]
            while deg[path[-1]] == 2:
                a, b = t.adjacency[path[-1]]
                path.append(a if b == path[-2] else b)
            if start < path[-1]:
                segments.append(tuple(path))
    segments.sort()
    return tuple(segments)


def squeeze(t: Tree) -> Tree:
    """Contract every segment to a single edge.

    The result keeps exactly the non-degree-2 vertices (relabelled
    densely in ascending id order) and has one edge per segment.
    """
    segments = segment_decomposition(t)
    kept = sorted(v for v in range(t.n) if t.degrees[v] != 2)
    relabel = {v: i for i, v in enumerate(kept)}
    edges = tuple((relabel[s[0]], relabel[s[-1]]) for s in segments)
    return Tree(len(kept), edges)


def _centers(t: Tree) -> tuple[int, ...]:
    if t.n <= 2:
        return tuple(range(t.n))
    deg = list(t.degrees)
    leaves = [v for v in range(t.n) if deg[v] == 1]
    count = t.n
    while count > 2:
        count -= len(leaves)
        nxt = []
        for v in leaves:
            deg[v] = 0
            for w in t.adjacency[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        leaves = nxt
    return tuple(sorted(leaves))


def _rooted_code(t: Tree, root: int) -> bytes:
    parent = [-2] * t.n
    parent[root] = -1
    order = [root]
    stack = [root]
    while stack:
        x = stack.pop()
        for y in t.adjacency[x]:
            if parent[y] == -2:
                parent[y] = x
                order.append(y)
                stack.append(y)
    child_codes: list[list[bytes]] = [[] for _ in range(t.n)]
    for x in reversed(order):
        code = b"(" + b"".join(sorted(child_codes[x])) + b")"
        if x == root:
            return code
        child_codes[parent[x]].append(code)
    raise AssertionError("unreachable")


def canonical_code(t: Tree) -> bytes:
    """Relabeling-invariant byte code: equal codes iff isomorphic.

    Nested-parenthesis encoding rooted at the tree center; bicentral
    trees take the lexicographically smaller of the two center codes.
    Serialize with .hex() for text output.
    """
    return min(_rooted_code(t, c) for c in _centers(t))


def realize_caterpillar(d: DegreeSequence) -> Tree:
    """Deterministic caterpillar with degree sequence d.

    Spine vertices 0..m-1 carry the internal degrees in non-increasing
    order; pendant ids are assigned left to right along the spine.
    """
    degs = d.degrees
    n = len(degs)
    if n == 1:
        return Tree(1, ())
    if n == 2:
        return Tree(2, ((0, 1),))
    m = sum(1 for x in degs if x >= 2)
    edges = [(i, i + 1) for i in range(m - 1)]
    nxt = m
    for i in range(m):
        spine_nbrs = 0 if m == 1 else (1 if i in (0, m - 1) else 2)
        for _ in range(degs[i] - spine_nbrs):
            edges.append((i, nxt))
            nxt += 1
    return Tree(n, tuple(edges))


def parse_tree(text: str) -> Tree:
    """Parse edge-list text: 'u v' per line, '#' comments ignored.

    The vertex set is 0..max_id; empty input is the single-vertex tree.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex id")
        edges.append((u, v))
    if not edges:
        return Tree(1, ())
    n = 1 + max(max(u, v) for u, v in edges)
    return Tree(n, tuple(edges))

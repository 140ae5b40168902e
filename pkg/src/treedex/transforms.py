"""Executable degree-shifting moves with predicted index deltas.

Seven moves, each preserving one family parameter:

    p1    shift a neighbor from the smaller of two branching vertices
          to the larger (keeps the pendant count n1)
    p2    shift a neighbor from a high-degree internal vertex to an
          internal vertex at least two degrees below it (keeps n1)
    b1    detach a neighbor of a degree->=4 vertex and append it to the
          end of a longest path through that vertex (keeps b)
    b3    merge all but three neighbors of the smaller of two
          degree->=4 vertices into the larger (keeps b)
    b4    make a degree-2 vertex pendant by handing its far neighbor to
          an adjacent branching vertex (keeps b, lowers n2)
    s1a   on the caterpillar realization, move two pendants from a
          degree->=5 vertex to a longest-path endpoint (keeps k)
    s1aa  on the caterpillar realization, move one pendant from each of
          two degree-4 vertices to a longest-path endpoint (keeps k)

Target selection is deterministic: vertices are ranked by (degree
descending, id ascending) and the first qualifying choice wins; longest
paths break ties toward smaller endpoint ids. The s-moves normalize the
input to its caterpillar realization first, so MoveRecord.before is
that realization (same degree sequence as the input).
"""

from __future__ import annotations

from dataclasses import dataclass

from .indices import WINDOW_LOW_A, validate_a, validate_alpha
from .trees import Tree, realize_caterpillar

TRANSFORM_KINDS = ("p1", "p2", "b1", "b3", "b4", "s1a", "s1aa")


@dataclass(frozen=True)
class MoveRecord:
    """One applied move: the trees, the edge diff, and the key vertices.

    actors by kind (degrees refer to `before`):
        p1:   (u, v, w)  u gains w, v loses w
        p2:   (u, v, w)  u loses w, v gains w
        b1:   (u, w, e)  u loses w, w reattached to path endpoint e
        b3:   (u, v)     v keeps 3 neighbors, u gains the rest
        b4:   (u, v, w)  degree-2 v loses w to branching u
        s1a:  (vi, e, u1, u2)      vi loses pendants u1, u2 to endpoint e
        s1aa: (vi, vj, e, u1, u2)  vi loses u1, vj loses u2, both to e
    """

    kind: str
    before: Tree
    after: Tree
    removed_edges: tuple[tuple[int, int], ...]
    added_edges: tuple[tuple[int, int], ...]
    actors: tuple[int, ...]


def _canon_order(t: Tree) -> list[int]:
    deg = t.degrees
    return sorted(range(t.n), key=lambda v: (-deg[v], v))


def _pick(t: Tree, candidates) -> int:
    deg = t.degrees
    return min(candidates, key=lambda v: (-deg[v], v))


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


def _record(kind: str, before: Tree, removed, added, actors) -> MoveRecord:
    removed = tuple(_norm(*e) for e in removed)
    added = tuple(_norm(*e) for e in added)
    after = before.replace_edges(removed, added)
    return MoveRecord(kind, before, after, removed, added, tuple(actors))


def apply_p1(t: Tree) -> MoveRecord:
    """Move a neighbor of branching v (off the u-v path) onto branching u,
    where d_u >= d_v. Requires at least two branching vertices."""
    deg = t.degrees
    branching = [v for v in _canon_order(t) if deg[v] >= 3]
    if len(branching) < 2:
        raise ValueError("needs at least two branching vertices")
    u, v = branching[0], branching[1]
    path = t.path_between(u, v)
    w = _pick(t, (x for x in t.adjacency[v] if x != path[-2]))
    return _record("p1", t, [(v, w)], [(u, w)], (u, v, w))


def apply_p2(t: Tree) -> MoveRecord:
    """Move a neighbor of u (off the u-v path) onto v, for internal u, v
    with d_u >= d_v + 2."""
    deg = t.degrees
    internal = [v for v in _canon_order(t) if deg[v] >= 2]
    for u in internal:
        partners = [v for v in internal if v != u and deg[u] >= deg[v] + 2]
        if partners:
            v = partners[0]
            break
    else:
        raise ValueError("no internal pair with degree gap >= 2")
    path = t.path_between(u, v)
    w = _pick(t, (x for x in t.adjacency[u] if x != path[1]))
    return _record("p2", t, [(u, w)], [(v, w)], (u, v, w))


def _branch_depth(t: Tree, u: int, root: int) -> tuple[int, int]:
    # Deepest vertex in the branch of u rooted at neighbor `root`;
    # ties resolved to the smallest id.
    best_d, best_v = 1, root
    seen = {u, root}
    frontier = [root]
    depth = 1
    while frontier:
        nxt = []
        for x in frontier:
            for y in t.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if nxt:
            depth += 1
            best_d, best_v = depth, min(nxt)
        frontier = nxt
    return best_d, best_v


def apply_b1(t: Tree) -> MoveRecord:
    """Detach one off-path neighbor of a degree->=4 vertex and append it
    to the endpoint of a longest path through that vertex."""
    deg = t.degrees
    u = _canon_order(t)[0]
    if deg[u] < 4:
        raise ValueError("maximum degree is at most 3")
    branches = [(_branch_depth(t, u, r), r) for r in t.adjacency[u]]
    best = None
    for i in range(len(branches)):
        for j in range(i + 1, len(branches)):
            (di, ei), ri = branches[i]
            (dj, ej), rj = branches[j]
            key = (-(di + dj), min(ei, ej), max(ei, ej))
            if best is None or key < best[0]:
                best = (key, (ei, ri), (ej, rj))
    (e1, r1), (e2, r2) = best[1], best[2]
    endpoint = max(e1, e2)
    w = _pick(t, (x for x in t.adjacency[u] if x not in (r1, r2)))
    return _record("b1", t, [(u, w)], [(w, endpoint)], (u, w, endpoint))


def apply_b3(t: Tree) -> MoveRecord:
    """Reduce the smaller of two degree->=4 vertices to exactly three
    neighbors, handing the others to the larger one."""
    deg = t.degrees
    big = [v for v in _canon_order(t) if deg[v] >= 4]
    if len(big) < 2:
        raise ValueError("needs two vertices of degree at least 4")
    u, v = big[0], big[1]
    toward = t.path_between(v, u)[1]
    others = sorted((x for x in t.adjacency[v] if x != toward), key=lambda x: (-deg[x], x))
    moved = sorted(others[2:])
    return _record("b3", t, [(v, x) for x in moved], [(u, x) for x in moved], (u, v))


def apply_b4(t: Tree) -> MoveRecord:
    """Turn a degree-2 vertex adjacent to a branching vertex into a
    pendant by moving its other neighbor onto the branching vertex."""
    deg = t.degrees
    for u in _canon_order(t):
        if deg[u] < 3:
            break
        twos = [x for x in t.adjacency[u] if deg[x] == 2]
        if twos:
            v = min(twos)
            w = next(x for x in t.adjacency[v] if x != u)
            return _record("b4", t, [(v, w)], [(u, w)], (u, v, w))
    raise ValueError("no degree-2 vertex adjacent to a branching vertex")


def _pendants(t: Tree, v: int) -> list[int]:
    deg = t.degrees
    return [x for x in t.adjacency[v] if deg[x] == 1]


def apply_s1a(t: Tree) -> MoveRecord:
    """On the caterpillar realization, move two pendants of a
    degree->=5 vertex to a longest-path endpoint. Keeps k."""
    seq = t.degree_sequence()
    if seq.degrees[0] < 5:
        raise ValueError("maximum degree is at most 4")
    cat = realize_caterpillar(seq)
    deg = cat.degrees
    m = sum(1 for d in deg if d >= 2)
    vi = 0  # spine position of the maximum degree
    if m == 1:
        pend = _pendants(cat, vi)
        v0, endpoint = pend[0], pend[1]
        off = [x for x in pend if x not in (v0, endpoint)]
    else:
        v0 = _pendants(cat, 0)[0]
        endpoint = _pendants(cat, m - 1)[0]
        off = [x for x in _pendants(cat, vi) if x not in (v0, endpoint)]
    u1, u2 = off[0], off[1]
    return _record(
        "s1a", cat,
        [(vi, u1), (vi, u2)],
        [(u1, endpoint), (u2, endpoint)],
        (vi, endpoint, u1, u2),
    )


def apply_s1aa(t: Tree) -> MoveRecord:
    """On the caterpillar realization, move one pendant from each of two
    degree-4 vertices to a longest-path endpoint. Keeps k."""
    seq = t.degree_sequence()
    if seq.degrees.count(4) < 2:
        raise ValueError("needs two vertices of degree 4")
    cat = realize_caterpillar(seq)
    deg = cat.degrees
    m = sum(1 for d in deg if d >= 2)
    vi, vj = [v for v in range(m) if deg[v] == 4][:2]
    v0 = _pendants(cat, 0)[0]
    endpoint = _pendants(cat, m - 1)[0]
    u1 = next(x for x in _pendants(cat, vi) if x not in (v0, endpoint))
    u2 = next(x for x in _pendants(cat, vj) if x not in (v0, endpoint))
    return _record(
        "s1aa", cat,
        [(vi, u1), (vj, u2)],
        [(u1, endpoint), (u2, endpoint)],
        (vi, vj, endpoint, u1, u2),
    )


TRANSFORMS = {
    "p1": apply_p1,
    "p2": apply_p2,
    "b1": apply_b1,
    "b3": apply_b3,
    "b4": apply_b4,
    "s1a": apply_s1a,
    "s1aa": apply_s1aa,
}


def apply_transform(kind: str, t: Tree) -> MoveRecord:
    if kind not in TRANSFORMS:
        raise ValueError(f"unknown transform {kind!r}")
    return TRANSFORMS[kind](t)


def predicted_delta(move: MoveRecord, *, alpha: float | None = None, a: float | None = None) -> float:
    """Closed-form index(before) - index(after) from the move's own
    degree bookkeeping (never from diffing the trees)."""
    if (alpha is None) == (a is None):
        raise ValueError("exactly one of alpha, a must be given")
    deg = move.before.degrees
    kind = move.kind
    if alpha is not None:
        alpha = validate_alpha(alpha)

        def f(x: int) -> float:
            return float(x) ** alpha

        two = 2.0**alpha
        three = 3.0**alpha
        if kind == "p1":
            du, dv = deg[move.actors[0]], deg[move.actors[1]]
            return f(dv) - f(dv - 1) - (f(du + 1) - f(du))
        if kind == "p2":
            du, dv = deg[move.actors[0]], deg[move.actors[1]]
            return f(du) - f(du - 1) - (f(dv + 1) - f(dv))
        if kind == "b1":
            du = deg[move.actors[0]]
            return f(du) - f(du - 1) - (two - 1.0)
        if kind == "b3":
            du, dv = deg[move.actors[0]], deg[move.actors[1]]
            return f(dv) - three - (f(du + dv - 3) - f(du))
        if kind == "b4":
            du = deg[move.actors[0]]
            return two - 1.0 - (f(du + 1) - f(du))
        if kind == "s1a":
            d = deg[move.actors[0]]
            return f(d) - f(d - 2) - (three - 1.0)
        if kind == "s1aa":
            return 2.0 * (4.0**alpha - three) - (three - 1.0)
        raise ValueError(f"unknown transform {kind!r}")

    a = validate_a(a)

    def g(x: int) -> float:
        return x * a**x

    if kind == "p1":
        du, dv = deg[move.actors[0]], deg[move.actors[1]]
        return g(dv) - g(dv - 1) - (g(du + 1) - g(du))
    if kind == "p2":
        du, dv = deg[move.actors[0]], deg[move.actors[1]]
        return g(du) - g(du - 1) - (g(dv + 1) - g(dv))
    if kind == "b1":
        du = deg[move.actors[0]]
        return g(du) - g(du - 1) - (2.0 * a * a - a)
    if kind == "b3":
        du, dv = deg[move.actors[0]], deg[move.actors[1]]
        return g(dv) - 3.0 * a**3 - (g(du + dv - 3) - g(du))
    if kind == "b4":
        du = deg[move.actors[0]]
        return 2.0 * a * a - a - (g(du + 1) - g(du))
    if kind == "s1a":
        d = deg[move.actors[0]]
        return g(d) - g(d - 2) - (3.0 * a**3 - a)
    if kind == "s1aa":
        return a * (8.0 * a**3 - 9.0 * a * a + 1.0)
    raise ValueError(f"unknown transform {kind!r}")


# Claimed sign of index(before) - index(after) per regime.
_R0_SIGNS = {  # (convex, concave)
    "p1": (-1, +1),
    "p2": (+1, -1),
    "b1": (+1, -1),
    "b3": (-1, +1),
    "b4": (-1, +1),
    "s1a": (+1, -1),
    "s1aa": (+1, -1),
}
_SEI_SIGNS = {  # (above_one, window, low)
    "p1": (None, +1, +1),
    "p2": (None, -1, -1),
    "b1": (+1, -1, -1),
    "b3": (-1, +1, +1),
    "b4": (-1, +1, +1),
    "s1a": (+1, -1, -1),
    "s1aa": (+1, -1, None),
}


def claimed_sign(kind: str, *, alpha: float | None = None, a: float | None = None) -> int | None:
    """Lemma-claimed sign of index(before) - index(after) in this regime,
    or None where no sign is claimed."""
    if (alpha is None) == (a is None):
        raise ValueError("exactly one of alpha, a must be given")
    if kind not in TRANSFORMS:
        raise ValueError(f"unknown transform {kind!r}")
    if alpha is not None:
        convex, concave = _R0_SIGNS[kind]
        return concave if 0.0 < validate_alpha(alpha) < 1.0 else convex
    above, window, low = _SEI_SIGNS[kind]
    a = validate_a(a)
    if a > 1.0:
        return above
    return window if a > WINDOW_LOW_A else low

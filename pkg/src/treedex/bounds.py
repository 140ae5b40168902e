"""Closed-form extremal bounds and their equality degree sequences.

Seven bound statements over three tree families (n >= 6 throughout):

    pt-spider    PT(n, n1): spider-type sequence (n1, 2^(n-n1-1), 1^n1)
    pt-balanced  PT(n, n1): near-regular internal degrees t/t+1
    bt-small     BT(n, b):  all branching degrees 3
    bt-big       BT(n, b):  one big vertex, the rest degree 3 or 1
    st-star      ST(n, k):  squeezed star side (k, 2^(n-k-1), 1^k)
    st-parity    ST(n, k):  max degree 4, at most one degree-4 vertex
    star         all n-vertex trees (n >= 4): the star

Every bound function returns the closed-form value, the claimed
optimization direction in the given parameter regime (None where no
claim exists), and the equality degree sequence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .indices import (
    WINDOW_LOW_A,
    r0_of_degseq,
    sei_of_degseq,
    validate_a,
    validate_alpha,
    values_close,
)
from .trees import DegreeSequence, Tree, realize_caterpillar, structural_profile

THEOREM_NAMES = (
    "pt-spider",
    "pt-balanced",
    "bt-small",
    "bt-big",
    "st-star",
    "st-parity",
    "star",
)

THEOREM_FAMILY = {
    "pt-spider": "pt",
    "pt-balanced": "pt",
    "bt-small": "bt",
    "bt-big": "bt",
    "st-star": "st",
    "st-parity": "st",
    "star": None,
}


@dataclass(frozen=True)
class FamilyConstraint:
    """One of PT(n, n1) / ST(n, k) / BT(n, b) with its validity range."""

    kind: str  # "pt" | "st" | "bt"
    n: int
    param: int

    def __post_init__(self) -> None:
        if self.kind not in ("pt", "st", "bt"):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.n < 6:
            raise ValueError("families are defined for n >= 6")
        n, p = self.n, self.param
        if self.kind == "pt" and not 3 <= p <= n - 2:
            raise ValueError(f"pendant count must satisfy 3 <= n1 <= n-2, got n1={p}, n={n}")
        if self.kind == "st" and not 3 <= p <= n - 2:
            raise ValueError(f"segment count must satisfy 3 <= k <= n-2, got k={p}, n={n}")
        if self.kind == "bt" and not 1 <= p <= (n - 2) // 2:
            raise ValueError(f"branching count must satisfy 1 <= b <= n/2 - 1, got b={p}, n={n}")


@dataclass(frozen=True)
class BalancedCounts:
    """Multiplicities of internal degrees t and t+1 in the balanced split."""

    t: int
    count_t: int
    count_t1: int


def balanced_counts(n: int, n1: int) -> BalancedCounts:
    """Near-regular internal degree split for trees with n1 pendants.

    Internal degrees take the two values t and t+1 with
    t = floor((n-2)/(n-n1)) + 1; the multiplicities are the unique
    non-negative solution of

        count_t + count_t1         = n - n1
        t*count_t + (t+1)*count_t1 = 2(n-1) - n1
    """
    FamilyConstraint("pt", n, n1)
    t = (n - 2) // (n - n1) + 1
    count_t1 = 2 * (n - 1) - n1 - t * (n - n1)
    count_t = (n - n1) - count_t1
    assert count_t >= 0 and count_t1 >= 0
    return BalancedCounts(t, count_t, count_t1)


def balanced_counts_formula(n: int, n1: int) -> tuple[int, int]:
    """Direct closed-form count expressions for the balanced split.

    Kept only for the verification report: these expressions violate
    the degree-sum identity (try n=10, n1=7, where one count goes
    negative), so balanced_counts solves the identity system instead.
    """
    t = (n - 2) // (n - n1) + 1
    return (n - n1) * t - n1 + 2, n - (n - n1) * t - 2


@dataclass(frozen=True)
class BoundValue:
    """A closed-form bound with its equality degree sequence.

    direction is "min" or "max" per the claimed regime, or None when no
    direction is claimed for the given index parameter; the value and
    the equality sequence are well-defined either way.
    """

    value: float
    direction: str | None
    equality_degseq: DegreeSequence


# direction claimed per alpha regime: (convex, concave)
_R0_DIRECTIONS = {
    "pt-spider": ("max", "min"),
    "pt-balanced": ("min", "max"),
    "bt-small": ("min", "max"),
    "bt-big": ("max", "min"),
    "st-star": ("max", "min"),
    "st-parity": ("min", "max"),
    "star": ("max", "min"),
}

# direction claimed per a regime: (above_one, window, low)
_SEI_DIRECTIONS = {
    "pt-spider": (None, "min", "min"),
    "pt-balanced": (None, "max", "max"),
    "bt-small": ("min", "max", "max"),
    "bt-big": ("max", "min", "min"),
    "st-star": ("max", None, None),
    "st-parity": ("min", "max", None),
    "star": ("max", None, None),
}


def _one_of(alpha, a) -> None:
    if (alpha is None) == (a is None):
        raise ValueError("exactly one of alpha, a must be given")


def claimed_direction(theorem: str, *, alpha: float | None = None, a: float | None = None) -> str | None:
    """The bound's claimed direction in the regime of the given parameter."""
    _one_of(alpha, a)
    if theorem not in THEOREM_NAMES:
        raise ValueError(f"unknown theorem {theorem!r}")
    if alpha is not None:
        convex, concave = _R0_DIRECTIONS[theorem]
        return concave if 0.0 < validate_alpha(alpha) < 1.0 else convex
    above, window, low = _SEI_DIRECTIONS[theorem]
    a = validate_a(a)
    if a > 1.0:
        return above
    return window if a > WINDOW_LOW_A else low


def pt_spider_bound(n: int, n1: int, *, alpha: float | None = None, a: float | None = None) -> BoundValue:
    """Bound attained by the spider-type sequence (n1, 2^(n-n1-1), 1^n1)."""
    FamilyConstraint("pt", n, n1)
    _one_of(alpha, a)
    seq = DegreeSequence((n1,) + (2,) * (n - n1 - 1) + (1,) * n1)
    if alpha is not None:
        alpha = validate_alpha(alpha)
        value = 2.0**alpha * n + float(n1) ** alpha - (2.0**alpha - 1.0) * n1 - 2.0**alpha
    else:
        a = validate_a(a)
        value = 2.0 * a * a * n + (a**n1 - 2.0 * a * a + a) * n1 - 2.0 * a * a
    return BoundValue(value, claimed_direction("pt-spider", alpha=alpha, a=a), seq)


def pt_balanced_bound(n: int, n1: int, *, alpha: float | None = None, a: float | None = None) -> BoundValue:
    """Bound attained by the near-regular split from balanced_counts."""
    _one_of(alpha, a)
    bc = balanced_counts(n, n1)
    seq = DegreeSequence((bc.t + 1,) * bc.count_t1 + (bc.t,) * bc.count_t + (1,) * n1)
    value = r0_of_degseq(seq, alpha) if alpha is not None else sei_of_degseq(seq, a)
    return BoundValue(value, claimed_direction("pt-balanced", alpha=alpha, a=a), seq)


def bt_bound_small_degrees(n: int, b: int, *, alpha: float | None = None, a: float | None = None) -> BoundValue:
    """Bound attained when every branching vertex has degree exactly 3."""
    FamilyConstraint("bt", n, b)
    _one_of(alpha, a)
    seq = DegreeSequence((3,) * b + (2,) * (n - 2 * b - 2) + (1,) * (b + 2))
    if alpha is not None:
        alpha = validate_alpha(alpha)
        value = 2.0**alpha * n + (3.0**alpha - 2.0 ** (alpha + 1) + 1.0) * b - 2.0 ** (alpha + 1) + 2.0
    else:
        a = validate_a(a)
        value = 2.0 * a * a * n + (3.0 * a**3 - 4.0 * a * a + a) * b - 2.0 * a * (2.0 * a - 1.0)
    return BoundValue(value, claimed_direction("bt-small", alpha=alpha, a=a), seq)


def bt_bound_one_big_vertex(n: int, b: int, *, alpha: float | None = None, a: float | None = None) -> BoundValue:
    """Bound attained by (n-2b+1, 3^(b-1), 1^(n-b)): no degree-2 vertex,
    at most one vertex of degree above 3."""
    FamilyConstraint("bt", n, b)
    _one_of(alpha, a)
    big = n - 2 * b + 1
    seq = DegreeSequence((big,) + (3,) * (b - 1) + (1,) * (n - b))
    if alpha is not None:
        alpha = validate_alpha(alpha)
        value = float(big) ** alpha + n + (3.0**alpha - 1.0) * b - 3.0**alpha
    else:
        a = validate_a(a)
        value = big * a**big + n * a + (3.0 * a**3 - a) * b - 3.0 * a**3
    return BoundValue(value, claimed_direction("bt-big", alpha=alpha, a=a), seq)


def st_star_side_bound(n: int, k: int, *, alpha: float | None = None, a: float | None = None) -> BoundValue:
    """Bound attained by (k, 2^(n-k-1), 1^k): the squeeze is a star."""
    FamilyConstraint("st", n, k)
    _one_of(alpha, a)
    seq = DegreeSequence((k,) + (2,) * (n - k - 1) + (1,) * k)
    if alpha is not None:
        alpha = validate_alpha(alpha)
        value = 2.0**alpha * n + float(k) ** alpha - (2.0**alpha - 1.0) * k - 2.0**alpha
    else:
        a = validate_a(a)
        value = 2.0 * a * a * n + k * a**k - (2.0 * a - 1.0) * a * k - 2.0 * a * a
    return BoundValue(value, claimed_direction("st-star", alpha=alpha, a=a), seq)


def st_parity_bound(n: int, k: int, *, alpha: float | None = None, a: float | None = None) -> BoundValue:
    """Parity-split bound: max degree 4 with at most one degree-4 vertex.

    Equality sequence is (4, 3^((k-4)/2), 2^(n-k-1), 1^((k+4)/2)) for
    even k and (3^((k-1)/2), 2^(n-k-1), 1^((k+3)/2)) for odd k.
    """
    FamilyConstraint("st", n, k)
    _one_of(alpha, a)
    even = k % 2 == 0
    if even:
        if k < 4:
            raise ValueError("even segment count must be at least 4")
        seq = DegreeSequence((4,) + (3,) * ((k - 4) // 2) + (2,) * (n - k - 1) + (1,) * ((k + 4) // 2))
    else:
        seq = DegreeSequence((3,) * ((k - 1) // 2) + (2,) * (n - k - 1) + (1,) * ((k + 3) // 2))
    if alpha is not None:
        alpha = validate_alpha(alpha)
        base = 2.0**alpha * n + (3.0**alpha - 2.0 ** (alpha + 1) + 1.0) / 2.0 * k
        if even:
            value = base + 4.0**alpha - 2.0 * 3.0**alpha - 2.0**alpha + 2.0
        else:
            value = base + (3.0 - 3.0**alpha - 2.0 ** (alpha + 1)) / 2.0
    else:
        a = validate_a(a)
        base = 2.0 * a * a * n + (3.0 * a**3 - 4.0 * a * a + a) / 2.0 * k
        if even:
            value = base + 4.0 * a**4 - 6.0 * a**3 - 2.0 * a * a + 2.0 * a
        else:
            value = base + (3.0 * a - 3.0 * a**3 - 4.0 * a * a) / 2.0
    return BoundValue(value, claimed_direction("st-parity", alpha=alpha, a=a), seq)


def star_global_bound(n: int, *, alpha: float | None = None, a: float | None = None) -> BoundValue:
    """Star bound over all n-vertex trees (n >= 4)."""
    if n < 4:
        raise ValueError("star bound requires n >= 4")
    _one_of(alpha, a)
    seq = DegreeSequence((n - 1,) + (1,) * (n - 1))
    if alpha is not None:
        alpha = validate_alpha(alpha)
        value = float(n - 1) ** alpha + (n - 1)
    else:
        a = validate_a(a)
        value = (n - 1) * a ** (n - 1) + (n - 1) * a
    return BoundValue(value, claimed_direction("star", alpha=alpha, a=a), seq)


_BOUND_FUNCTIONS = {
    "pt-spider": pt_spider_bound,
    "pt-balanced": pt_balanced_bound,
    "bt-small": bt_bound_small_degrees,
    "bt-big": bt_bound_one_big_vertex,
    "st-star": st_star_side_bound,
    "st-parity": st_parity_bound,
}


def theorem_bound(theorem: str, n: int, param: int | None = None, *,
                  alpha: float | None = None, a: float | None = None) -> BoundValue:
    """Dispatch a bound by theorem name ("star" takes no family parameter)."""
    if theorem == "star":
        if param is not None:
            raise ValueError("the star bound takes no family parameter")
        return star_global_bound(n, alpha=alpha, a=a)
    if theorem not in _BOUND_FUNCTIONS:
        raise ValueError(f"unknown theorem {theorem!r}")
    if param is None:
        raise ValueError(f"{theorem} requires a family parameter")
    return _BOUND_FUNCTIONS[theorem](n, param, alpha=alpha, a=a)


def construct_extremal(theorem: str, n: int, param: int | None = None) -> Tree:
    """Caterpillar realization of a theorem's equality degree sequence.

    The result is checked for family membership and, at a representative
    exponent, for agreement between the closed form and the realization.
    """
    bound = theorem_bound(theorem, n, param, alpha=2.0)
    tree = realize_caterpillar(bound.equality_degseq)
    profile = structural_profile(tree)
    family = THEOREM_FAMILY[theorem]
    if family == "pt":
        assert profile.n1 == param
    elif family == "st":
        assert profile.k == param
    elif family == "bt":
        assert profile.b == param
    else:
        assert profile.max_degree == n - 1
    assert values_close(r0_of_degseq(tree.degree_sequence(), 2.0), bound.value)
    return tree

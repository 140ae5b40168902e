"""Degree-based index evaluation and parameter-regime classification.

Both indices depend only on the degree sequence:

    power sum        R0(T, alpha) = sum_v d_v**alpha     alpha not in {0, 1}
    weighted expsum  SEI(T, a)    = sum_v d_v * a**d_v   a > 0, a != 1

alpha = 2 specializes to the first Zagreb index, alpha = -1/2 to the
plain zeroth-order connectivity index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .trees import DegreeSequence, Tree

# Boundary between the "window" and "low" regimes for a < 1: the positive
# root of 8a^2 - a - 1, from 8a^3 - 9a^2 + 1 = (a - 1)(8a^2 - a - 1).
WINDOW_LOW_A = (1.0 + math.sqrt(33.0)) / 16.0

CONVEX = "convex"          # alpha < 0 or alpha > 1
CONCAVE = "concave"        # 0 < alpha < 1
ABOVE_ONE = "above_one"    # a > 1
WINDOW = "window"          # WINDOW_LOW_A < a < 1
LOW = "low"                # 0 < a <= WINDOW_LOW_A

# Comparison tolerances used across bounds and verification.
REL_TOL = 1e-9
ABS_TOL = 1e-12


def values_close(x: float, y: float) -> bool:
    """Relative 1e-9 comparison with absolute floor 1e-12."""
    return abs(x - y) <= max(REL_TOL * max(abs(x), abs(y)), ABS_TOL)


def validate_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if alpha == 0.0 or alpha == 1.0:
        raise ValueError("alpha must be a real number other than 0 and 1")
    return alpha


def validate_a(a: float) -> float:
    a = float(a)
    if a <= 0.0 or a == 1.0:
        raise ValueError("a must be a positive real number different from 1")
    return a


@dataclass(frozen=True)
class IndexParams:
    """Exponent pair: alpha for the power sum, a for the weighted expsum."""

    alpha: float | None = None
    a: float | None = None

    def __post_init__(self) -> None:
        if self.alpha is None and self.a is None:
            raise ValueError("at least one of alpha, a is required")
        if self.alpha is not None:
            validate_alpha(self.alpha)
        if self.a is not None:
            validate_a(self.a)


@dataclass(frozen=True)
class Regime:
    r0_regime: str | None
    sei_regime: str | None


def classify_regime(params: IndexParams) -> Regime:
    """Open-interval regime labels; boundary values are already rejected."""
    r0 = None
    if params.alpha is not None:
        r0 = CONCAVE if 0.0 < params.alpha < 1.0 else CONVEX
    sei = None
    if params.a is not None:
        if params.a > 1.0:
            sei = ABOVE_ONE
        elif params.a > WINDOW_LOW_A:
            sei = WINDOW
        else:
            sei = LOW
    return Regime(r0, sei)


def _degrees(d) -> tuple[int, ...]:
    return d.degrees if isinstance(d, DegreeSequence) else tuple(d)


def r0_of_degseq(d, alpha: float) -> float:
    alpha = validate_alpha(alpha)
    return math.fsum(x**alpha for x in _degrees(d))


def sei_of_degseq(d, a: float) -> float:
    a = validate_a(a)
    return math.fsum(x * a**x for x in _degrees(d))


def r0_general(t: Tree, alpha: float) -> float:
    """sum_v d_v**alpha over the tree's vertices (n >= 2)."""
    if t.n < 2:
        raise ValueError("index is defined for n >= 2")
    return r0_of_degseq(t.degrees, alpha)


def sei(t: Tree, a: float) -> float:
    """sum_v d_v * a**d_v over the tree's vertices (n >= 2)."""
    if t.n < 2:
        raise ValueError("index is defined for n >= 2")
    return sei_of_degseq(t.degrees, a)

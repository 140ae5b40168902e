"""Exhaustive verification of the closed-form bounds and move monotonicity.

Every (theorem, n, family parameter, index parameter) cell where a
direction is claimed gets checked against brute force over the complete
enumerated family: the bound must equal the true optimum and the set of
optimizing degree sequences must equal the characterized equality
sequence. Cells that fail are reported as REFUTED with witnesses;
refutations are data, not errors.

All outputs are deterministic: identical inputs produce byte-identical
JSON and CSV documents (no timestamps or wall-clock data inside).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache

from .bounds import (
    THEOREM_FAMILY,
    THEOREM_NAMES,
    FamilyConstraint,
    balanced_counts,
    balanced_counts_formula,
    theorem_bound,
)
from .enumeration import free_trees
from .indices import (
    ABOVE_ONE,
    ABS_TOL,
    CONCAVE,
    CONVEX,
    LOW,
    REL_TOL,
    WINDOW,
    WINDOW_LOW_A,
    r0_general,
    r0_of_degseq,
    sei,
    sei_of_degseq,
    values_close,
)
from .trees import canonical_code, structural_profile
from .transforms import TRANSFORMS, claimed_sign

CONFIRMED = "CONFIRMED"
REFUTED = "REFUTED"

DEFAULT_ALPHA_GRID = (-1.0, -0.5, 0.5, 2.0, 3.0)
# Covers every regime, including both sides of the window boundary.
DEFAULT_A_GRID = (0.2, 0.3, WINDOW_LOW_A + 0.01, 0.6, 0.9, 1.5, 2.0)

# Stable ids for the seven bound statements.
PT_MIN_SPIDER = "pt-spider"
PT_BALANCED = "pt-balanced"
BT_SMALL = "bt-small"
BT_BIG = "bt-big"
ST_STAR_SIDE = "st-star"
ST_PARITY = "st-parity"
STAR_GLOBAL = "star"


@dataclass(frozen=True)
class _TreeRecord:
    degseq: tuple[int, ...]
    n1: int
    k: int
    b: int
    code: str
    edge_text: str


@lru_cache(maxsize=None)
def _census(n: int) -> tuple[_TreeRecord, ...]:
    records = []
    for t in free_trees(n):
        profile = structural_profile(t)
        records.append(
            _TreeRecord(
                degseq=tuple(t.degree_sequence().degrees),
                n1=profile.n1,
                k=profile.k,
                b=profile.b,
                code=canonical_code(t).hex(),
                edge_text=t.edge_text(),
            )
        )
    return tuple(records)


@lru_cache(maxsize=None)
def _family_groups(kind: str | None, n: int):
    """param -> degseq -> records; kind None groups all trees under None."""
    groups: dict = {}
    for rec in _census(n):
        if kind is None:
            param = None
        else:
            param = {"pt": rec.n1, "st": rec.k, "bt": rec.b}[kind]
        groups.setdefault(param, {}).setdefault(rec.degseq, []).append(rec)
    return {
        param: {ds: tuple(rs) for ds, rs in by_seq.items()}
        for param, by_seq in groups.items()
    }


def _scan(kind: str | None, n: int, param: int | None, direction: str, *,
          alpha: float | None = None, a: float | None = None):
    by_seq = _family_groups(kind, n).get(param)
    if not by_seq:
        raise ValueError(f"empty family {kind}({n}, {param})")
    if alpha is not None:
        values = {ds: r0_of_degseq(ds, alpha) for ds in by_seq}
    else:
        values = {ds: sei_of_degseq(ds, a) for ds in by_seq}
    best = min(values.values()) if direction == "min" else max(values.values())
    winners = tuple(sorted(ds for ds, val in values.items() if values_close(val, best)))
    witnesses = tuple(rec for ds in winners for rec in by_seq[ds])
    return best, winners, witnesses


def oracle_extremum(c: FamilyConstraint, direction: str, *,
                    alpha: float | None = None, a: float | None = None):
    """Exact extremum of an index over a family, plus the deduplicated
    set of optimizing degree sequences."""
    if direction not in ("min", "max"):
        raise ValueError("direction must be 'min' or 'max'")
    if (alpha is None) == (a is None):
        raise ValueError("exactly one of alpha, a must be given")
    best, winners, _ = _scan(c.kind, c.n, c.param, direction, alpha=alpha, a=a)
    return best, winners


@dataclass(frozen=True)
class TheoremReport:
    """Per-cell verdict comparing a closed-form bound to the oracle."""

    theorem: str
    n: int
    param: int | None
    index_kind: str  # "r0" | "sei"
    index_param: float
    direction: str
    bound: float
    oracle: float
    bound_matches: bool
    equality_set_matches: bool
    verdict: str
    expected_degseq: tuple[int, ...]
    optimal_degseqs: tuple[tuple[int, ...], ...]
    witness_codes: tuple[str, ...]
    witness_edge_texts: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "param": self.param,
            "index": self.index_kind,
            "index_param": self.index_param,
            "direction": self.direction,
            "bound": self.bound,
            "oracle": self.oracle,
            "verdict": self.verdict,
            "witnesses": list(self.witness_edge_texts),
        }


def _check_cell(theorem: str, n: int, param: int | None, *,
                alpha: float | None = None, a: float | None = None) -> TheoremReport | None:
    bound = theorem_bound(theorem, n, param, alpha=alpha, a=a)
    if bound.direction is None:
        return None
    kind = THEOREM_FAMILY[theorem]
    best, winners, witnesses = _scan(kind, n, param, bound.direction, alpha=alpha, a=a)
    expected = tuple(bound.equality_degseq.degrees)
    bound_matches = values_close(bound.value, best)
    equality_set_matches = winners == (expected,)
    ordered = sorted(witnesses, key=lambda rec: (rec.degseq, rec.code))
    return TheoremReport(
        theorem=theorem,
        n=n,
        param=param,
        index_kind="r0" if alpha is not None else "sei",
        index_param=float(alpha if alpha is not None else a),
        direction=bound.direction,
        bound=bound.value,
        oracle=best,
        bound_matches=bound_matches,
        equality_set_matches=equality_set_matches,
        verdict=CONFIRMED if bound_matches and equality_set_matches else REFUTED,
        expected_degseq=expected,
        optimal_degseqs=winners,
        witness_codes=tuple(rec.code for rec in ordered),
        witness_edge_texts=tuple(rec.edge_text for rec in ordered),
    )


def _family_params(theorem: str, n: int) -> tuple[int | None, ...]:
    kind = THEOREM_FAMILY[theorem]
    if kind is None:
        return (None,)
    if kind == "bt":
        return tuple(range(1, (n - 2) // 2 + 1))
    return tuple(range(3, n - 1))


def check_theorem(theorem: str, n_range, alpha_grid=DEFAULT_ALPHA_GRID,
                  a_grid=DEFAULT_A_GRID) -> list[TheoremReport]:
    """One report per claimed cell, ordered by (n, param, index, value)."""
    if theorem not in THEOREM_NAMES:
        raise ValueError(f"unknown theorem {theorem!r}")
    reports = []
    for n in n_range:
        for param in _family_params(theorem, n):
            for alpha in alpha_grid:
                report = _check_cell(theorem, n, param, alpha=alpha)
                if report is not None:
                    reports.append(report)
            for a in a_grid:
                report = _check_cell(theorem, n, param, a=a)
                if report is not None:
                    reports.append(report)
    return reports


@dataclass(frozen=True)
class MonotonicityRow:
    """Sign conformance of one move under one index parameter."""

    kind: str
    index_kind: str
    index_param: float
    regime: str
    claimed_sign: int
    applicable: int
    conforming: int
    counterexamples: tuple[str, ...]  # canonical codes (hex) of offending inputs
    counterexample_total: int

    @property
    def conformance(self) -> float:
        return 1.0 if self.applicable == 0 else self.conforming / self.applicable

    def to_json_dict(self) -> dict:
        return {
            "transform": self.kind,
            "index": self.index_kind,
            "index_param": self.index_param,
            "regime": self.regime,
            "claimed_sign": self.claimed_sign,
            "applicable": self.applicable,
            "conforming": self.conforming,
            "conformance": self.conformance,
            "counterexamples": list(self.counterexamples),
            "counterexample_total": self.counterexample_total,
        }


def _regime_label(*, alpha: float | None = None, a: float | None = None) -> str:
    if alpha is not None:
        return CONCAVE if 0.0 < alpha < 1.0 else CONVEX
    if a > 1.0:
        return ABOVE_ONE
    return WINDOW if a > WINDOW_LOW_A else LOW


def check_monotonicity(kind: str, n_range, alpha_grid=DEFAULT_ALPHA_GRID,
                       a_grid=DEFAULT_A_GRID) -> list[MonotonicityRow]:
    """Sign of the actual delta vs the claimed sign, over every applicable
    tree in range. Codes refer to the tree the move actually ran on
    (the caterpillar realization for the s-moves)."""
    if kind not in TRANSFORMS:
        raise ValueError(f"unknown transform {kind!r}")
    moves = []
    for n in n_range:
        for t in free_trees(n):
            try:
                moves.append(TRANSFORMS[kind](t))
            except ValueError:
                continue
    rows = []
    for index_kind, grid in (("r0", alpha_grid), ("sei", a_grid)):
        for x in grid:
            keyword = {"alpha": x} if index_kind == "r0" else {"a": x}
            sign = claimed_sign(kind, **keyword)
            if sign is None:
                continue
            evaluate = r0_general if index_kind == "r0" else sei
            conforming = 0
            offenders = []
            for move in moves:
                delta = evaluate(move.before, x) - evaluate(move.after, x)
                if (delta > ABS_TOL and sign > 0) or (delta < -ABS_TOL and sign < 0):
                    conforming += 1
                else:
                    offenders.append(canonical_code(move.before).hex())
            rows.append(
                MonotonicityRow(
                    kind=kind,
                    index_kind=index_kind,
                    index_param=float(x),
                    regime=_regime_label(**keyword),
                    claimed_sign=sign,
                    applicable=len(moves),
                    conforming=conforming,
                    counterexamples=tuple(offenders[:10]),
                    counterexample_total=len(offenders),
                )
            )
    return rows


def _balanced_count_audit(n_lo: int = 6, n_hi: int = 14) -> dict:
    rows = []
    failures = 0
    for n in range(n_lo, n_hi + 1):
        for n1 in range(3, n - 1):
            bc = balanced_counts(n, n1)
            fx, fy = balanced_counts_formula(n, n1)
            internal_sum = 2 * (n - 1) - n1
            formula_ok = (
                fx >= 0
                and fy >= 0
                and bc.t * fx + (bc.t + 1) * fy == internal_sum
                and fx + fy == n - n1
            )
            if not formula_ok:
                failures += 1
            rows.append(
                {
                    "n": n,
                    "n1": n1,
                    "t": bc.t,
                    "identity_counts": [bc.count_t, bc.count_t1],
                    "formula_counts": [fx, fy],
                    "formula_satisfies_identities": formula_ok,
                }
            )
    return {
        "description": (
            "Internal degree multiplicities for the balanced-split bound: "
            "the identity-consistent counts (used by pt-balanced) versus "
            "the direct closed-form count expressions, which fail the "
            "degree-sum identity and are therefore not used."
        ),
        "n_range": [n_lo, n_hi],
        "cells_checked": len(rows),
        "formula_identity_failures": failures,
        "cells": rows,
    }


def full_report(n_max: int = 14, alpha_grid=DEFAULT_ALPHA_GRID, a_grid=DEFAULT_A_GRID,
                mono_n_max: int = 10) -> dict:
    """Deterministic aggregate document: every theorem cell for n in
    6..n_max, monotonicity rows for applicable trees up to mono_n_max,
    and the balanced-count audit."""
    cells = []
    for theorem in THEOREM_NAMES:
        cells.extend(check_theorem(theorem, range(6, n_max + 1), alpha_grid, a_grid))
    mono = []
    for kind in sorted(TRANSFORMS):
        mono.extend(
            check_monotonicity(kind, range(4, min(mono_n_max, n_max) + 1), alpha_grid, a_grid)
        )
    return {
        "n_range": [6, n_max],
        "alpha_grid": list(alpha_grid),
        "a_grid": list(a_grid),
        "tolerances": {"relative": REL_TOL, "absolute": ABS_TOL},
        "cells": [c.to_json_dict() for c in cells],
        "monotonicity": [m.to_json_dict() for m in mono],
        "balanced_count_audit": _balanced_count_audit(),
    }


def reports_to_json(reports) -> str:
    """JSON array of cell objects (the report schema)."""
    return json.dumps([r.to_json_dict() for r in reports], indent=2) + "\n"


CSV_COLUMNS = ("theorem", "n", "param", "index", "index_param", "direction",
               "bound", "oracle", "verdict", "witnesses")


def reports_to_csv(reports) -> str:
    """CSV flattening with the same columns as the JSON schema.

    Witness edge lists use ';' between edges and '|' between witnesses.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(
            [
                r.theorem,
                r.n,
                "" if r.param is None else r.param,
                r.index_kind,
                repr(r.index_param),
                r.direction,
                repr(r.bound),
                repr(r.oracle),
                r.verdict,
                "|".join(text.replace("\n", ";") for text in r.witness_edge_texts),
            ]
        )
    return buf.getvalue()

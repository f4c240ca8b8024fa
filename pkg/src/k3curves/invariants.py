"""Invariant tables, the sign/monotonicity pattern of w_g, and count bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .eta import RealTopology, welschinger_series, yau_zaslow_series

__all__ = [
    "TableRow",
    "InvariantTable",
    "BoundPair",
    "MonotonicityReport",
    "DominanceReport",
    "compute_table",
    "verify_sign_monotonicity",
    "bounds_for",
    "refined_count_bound",
    "tritangent_bound",
    "column_dominance",
    "DEFAULT_TOPOLOGIES",
]

# Columns of the published appendix table.
DEFAULT_TOPOLOGIES = (RealTopology(0), RealTopology(-18), RealTopology(20))


@dataclass(frozen=True)
class TableRow:
    g: int
    w: dict[int, int]  # keyed by e_R
    c: int


@dataclass(frozen=True)
class InvariantTable:
    g_max: int
    topologies: tuple[RealTopology, ...]
    rows: tuple[TableRow, ...]

    def w(self, e_r: int, g: int) -> int:
        return self.rows[g].w[e_r]

    def c(self, g: int) -> int:
        return self.rows[g].c

    @property
    def e_r_values(self) -> list[int]:
        return [t.e_r for t in self.topologies]

    def to_dict(self) -> dict:
        return {
            "rows": [
                {"g": r.g, "w": {str(e): r.w[e] for e in self.e_r_values}, "c": r.c}
                for r in self.rows
            ]
        }

    @classmethod
    def from_dict(cls, data: dict) -> InvariantTable:
        rows = data["rows"]
        e_rs = [int(k) for k in rows[0]["w"]] if rows else []
        topologies = tuple(RealTopology(e, unchecked=not -18 <= e <= 20) for e in e_rs)
        parsed = tuple(
            TableRow(int(r["g"]), {int(k): int(v) for k, v in r["w"].items()}, int(r["c"])) for r in rows
        )
        return cls(len(parsed) - 1, topologies, parsed)


@dataclass(frozen=True)
class BoundPair:
    """|w_g| <= r_g <= c_g; r_g itself is only bracketed."""

    g: int
    lower: int
    upper: int


@dataclass
class MonotonicityReport:
    e_r: int
    g_max: int
    passed: bool
    first_violation: int | None = None
    reason: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {
            "suite": "monotonicity",
            "e_R": self.e_r,
            "g_max": self.g_max,
            "status": self.status,
            "first_violation": self.first_violation,
            "reason": self.reason,
        }


@dataclass
class DominanceReport:
    """Empirical observation only; not a stated theorem."""

    g_max: int
    e_r_values: list[int]
    holds: bool
    violations: list[tuple[int, int]] = field(default_factory=list)  # (g, e_R)
    marker: str = "conjecture-level"


def compute_table(topologies: Sequence[RealTopology], g_max: int) -> InvariantTable:
    if g_max < 0:
        raise ValueError("g_max must be non-negative")
    topologies = tuple(topologies)
    for t in topologies:
        t.require_checked()
    columns = {t.e_r: welschinger_series(t, g_max).coeffs for t in topologies}
    c = yau_zaslow_series(g_max).coeffs
    rows = tuple(TableRow(g, {e: columns[e][g] for e in columns}, c[g]) for g in range(g_max + 1))
    return InvariantTable(g_max, topologies, rows)


def verify_sign_monotonicity(t: RealTopology, g_max: int) -> MonotonicityReport:
    """Check the sign and strict-growth pattern of w_1, ..., w_gmax.

    e_R < 0: 0 < w_1 < w_2 < ...  with w_1 = |e_R|.
    e_R = 0: odd w_g vanish and 12 = w_2 < w_4 < ...
    e_R > 0: (-1)^g w_g > 0 and e_R = -w_1 < w_2 < -w_3 < ...
    """
    t.require_checked()
    if g_max < 1:
        raise ValueError("g_max must be >= 1")
    w = welschinger_series(t, g_max).coeffs
    e = t.e_r

    def fail(g, why):
        return MonotonicityReport(e, g_max, False, g, why)

    if w[1] != -e:
        return fail(1, f"w_1 = {w[1]}, expected {-e}")

    if e < 0:
        for g in range(1, g_max + 1):
            if w[g] <= 0:
                return fail(g, f"w_{g} = {w[g]} is not positive")
            if g > 1 and w[g] <= w[g - 1]:
                return fail(g, f"w_{g} = {w[g]} <= w_{g - 1} = {w[g - 1]}")
    elif e == 0:
        for g in range(1, g_max + 1, 2):
            if w[g] != 0:
                return fail(g, f"odd w_{g} = {w[g]} is nonzero")
        if g_max >= 2 and w[2] != 12:
            return fail(2, f"w_2 = {w[2]}, expected 12")
        for g in range(4, g_max + 1, 2):
            if w[g] <= w[g - 2]:
                return fail(g, f"w_{g} = {w[g]} <= w_{g - 2} = {w[g - 2]}")
    else:
        prev = 0
        for g in range(1, g_max + 1):
            signed = w[g] if g % 2 == 0 else -w[g]
            if signed <= 0:
                return fail(g, f"(-1)^{g} w_{g} = {signed} is not positive")
            if signed <= prev:
                return fail(g, f"|w_{g}| = {signed} <= |w_{g - 1}| = {prev}")
            prev = signed
    return MonotonicityReport(e, g_max, True)


def bounds_for(t: RealTopology, g: int) -> BoundPair:
    t.require_checked()
    if g < 0:
        raise ValueError("g must be non-negative")
    w = welschinger_series(t, g)[g]
    return BoundPair(g, abs(w), yau_zaslow_series(g)[g])


def refined_count_bound(k: int, w: int) -> int:
    """Lower bound on the number of real rational curves.

    ``k`` curves are known to carry Welschinger weight -1, so n_- >= k and
    n_+ = n_- + w >= k + w; hence n_+ + n_- >= 2k + w.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k + w < 0:
        raise ValueError(f"inconsistent inputs: k + w = {k + w} < 0")
    return 2 * k + w


def tritangent_bound(m: int) -> int:
    """8 supporting planes for every triple of contractible components."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return 8 * comb(m, 3)


def column_dominance(topologies: Sequence[RealTopology], g_max: int) -> DominanceReport:
    """Does w_g(e_R=-18) >= |w_g(e_R)| hold for every other topology, g = 1..g_max?"""
    ref = welschinger_series(RealTopology(-18), g_max).coeffs
    violations = []
    for t in topologies:
        if t.e_r == -18:
            continue
        w = welschinger_series(t, g_max).coeffs
        violations.extend((g, t.e_r) for g in range(1, g_max + 1) if ref[g] < abs(w[g]))
    return DominanceReport(g_max, [t.e_r for t in topologies], not violations, violations)

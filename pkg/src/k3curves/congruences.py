"""Finite-range verification of the real/complex congruences.

Everything runs in residue rings so that long ranges stay cheap; pass
``exact=True`` to :func:`check_clause` to reduce big-integer expansions
instead (used to cross-validate the modular path).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .eta import (
    RealTopology,
    gauss_theta_series,
    j_coefficients,
    klein_qj_series,
    welschinger_series,
    yau_zaslow_series,
)
from .series import ZZ, CoefficientRing, TruncatedSeries, ts_factor_product, ts_mul, ts_pow

__all__ = [
    "CongruenceClause",
    "Violation",
    "CongruenceReport",
    "CheckReport",
    "CLAUSES",
    "check_clause",
    "sweep_clauses",
    "parity_sequence",
    "parity_self_similarity",
    "odd_coefficient_gaps",
    "check_lehner",
    "check_j_congruence",
    "check_3dissection",
    "check_theta_ninth_power",
    "check_mod2_collapse",
]

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "not-applicable"


@dataclass(frozen=True)
class CongruenceClause:
    """One congruence statement between w_g and c_g.

    ``applies`` filters topologies by e_R.  When ``asserts_congruence`` is
    set, w_g = c_g (mod m) is claimed for every g >= 1; independently,
    w_g = c_g = 0 (mod m) is claimed for every g accepted by ``vanishes``.
    """

    id: str
    modulus: int
    statement: str
    applies: Callable[[int], bool] = field(compare=False)
    vanishes: Callable[[int], bool] = field(compare=False)
    asserts_congruence: bool = True


CLAUSES: dict[str, CongruenceClause] = {
    c.id: c
    for c in (
        CongruenceClause(
            "mod2",
            2,
            "w_g = c_g (mod 2); both even unless 8 | g",
            lambda e: True,
            lambda g: g % 8 != 0,
        ),
        CongruenceClause(
            "mod4",
            4,
            "if 4 | e_R: w_g = c_g (mod 4); both = 0 (mod 4) unless 4 | g",
            lambda e: e % 4 == 0,
            lambda g: g % 4 != 0,
        ),
        CongruenceClause(
            "mod8",
            8,
            "if 8 | e_R: w_g = c_g (mod 8); both = 0 (mod 8) for odd g",
            lambda e: e % 8 == 0,
            lambda g: g % 2 == 1,
        ),
        CongruenceClause(
            "mod3",
            3,
            "if 3 | e_R: w_g = c_g = 0 (mod 3) unless 3 | g",
            lambda e: e % 3 == 0,
            lambda g: g % 3 != 0,
            asserts_congruence=False,
        ),
        CongruenceClause(
            "mod9",
            9,
            "if 9 | e_R: w_g = c_g = 0 (mod 9) for g = 4 (mod 6)",
            lambda e: e % 9 == 0,
            lambda g: g % 6 == 4,
            asserts_congruence=False,
        ),
        CongruenceClause(
            "mod16",
            16,
            "if 16 | e_R: w_g = c_g = 0 (mod 16) for odd g > 1",
            lambda e: e % 16 == 0,
            lambda g: g % 2 == 1 and g > 1,
            asserts_congruence=False,
        ),
    )
}


@dataclass(frozen=True)
class Violation:
    g: int
    w_mod: int
    c_mod: int
    subclaim: str  # "congruence" or "vanishing"

    def to_dict(self) -> dict:
        return {"g": self.g, "w_mod": self.w_mod, "c_mod": self.c_mod, "subclaim": self.subclaim}


@dataclass
class CongruenceReport:
    clause: CongruenceClause
    e_r: int
    g_max: int
    status: str
    violations: list[Violation] = field(default_factory=list)
    # per-subclaim status: pass / fail / not-claimed / not-applicable
    subclaims: dict[str, str] = field(default_factory=dict)

    @property
    def modulus(self) -> int:
        return self.clause.modulus

    def to_dict(self) -> dict:
        return {
            "suite": "congruences",
            "clause": self.clause.id,
            "e_R": self.e_r,
            "modulus": self.modulus,
            "g_max": self.g_max,
            "status": self.status,
            "violations": [v.to_dict() for v in self.violations],
            "subclaims": dict(self.subclaims),
        }


@dataclass
class CheckReport:
    """Outcome of a single named identity or congruence family check."""

    name: str
    status: str
    params: dict = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "status": self.status,
            "params": dict(self.params),
            "violations": list(self.violations),
            "details": dict(self.details),
        }


def _status(violations) -> str:
    return FAIL if violations else PASS


def check_clause(clause: CongruenceClause | str, t: RealTopology, g_max: int, exact: bool = False) -> CongruenceReport:
    if isinstance(clause, str):
        clause = CLAUSES[clause]
    t.require_checked()
    if g_max < 1:
        raise ValueError("g_max must be >= 1")
    if not clause.applies(t.e_r):
        na = {"congruence": NOT_APPLICABLE, "vanishing": NOT_APPLICABLE}
        return CongruenceReport(clause, t.e_r, g_max, NOT_APPLICABLE, [], na)

    m = clause.modulus
    if exact:
        w = [x % m for x in welschinger_series(t, g_max, ZZ).coeffs]
        c = [x % m for x in yau_zaslow_series(g_max, ZZ).coeffs]
    else:
        ring = CoefficientRing.mod(m)
        w = welschinger_series(t, g_max, ring).coeffs
        c = yau_zaslow_series(g_max, ring).coeffs

    congruence, vanishing = [], []
    for g in range(1, g_max + 1):
        if clause.asserts_congruence and w[g] != c[g]:
            congruence.append(Violation(g, w[g], c[g], "congruence"))
        if clause.vanishes(g) and (w[g] or c[g]):
            vanishing.append(Violation(g, w[g], c[g], "vanishing"))
    subclaims = {
        "congruence": _status(congruence) if clause.asserts_congruence else "not-claimed",
        "vanishing": _status(vanishing),
    }
    violations = sorted(congruence + vanishing, key=lambda v: (v.g, v.subclaim))
    return CongruenceReport(clause, t.e_r, g_max, _status(violations), violations, subclaims)


def sweep_clauses(topologies: Iterable[RealTopology], g_max: int, exact: bool = False) -> list[CongruenceReport]:
    """Every clause against every topology, ordered by e_R then clause."""
    return [
        check_clause(clause, t, g_max, exact=exact)
        for t in sorted(topologies)
        for clause in CLAUSES.values()
    ]


_Z2 = CoefficientRing.mod(2)


def parity_sequence(k: int) -> list[int]:
    """Bits i_0..i_k with i_n = c_{8n} = w_{8n} (mod 2).

    Read off prod (1 - q^n)^(-3) mod 2, since the mod-2 generating function
    collapses to prod (1 - q^(8n))^(-3).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    return list(ts_factor_product(1, -1, -3, k, _Z2).coeffs)


def _spread(bits: list[int], stride: int, order: int) -> TruncatedSeries:
    cs = [0] * (order + 1)
    for n, b in enumerate(bits):
        if n * stride > order:
            break
        cs[n * stride] = b
    return TruncatedSeries(cs, _Z2)


def _jacobi_factor_mod2(order: int) -> TruncatedSeries:
    # prod (1 - q^(16n))^2 / (1 - q^(8n))
    return ts_mul(ts_factor_product(16, -1, 2, order, _Z2), ts_factor_product(8, -1, -1, order, _Z2))


def parity_self_similarity(k: int) -> CheckReport:
    """sum i_n q^(8n) = J(q) * sum i_n q^(16n) (mod 2), to order 8k."""
    order = 8 * k
    bits = parity_sequence(k)
    lhs = _spread(bits, 8, order)
    rhs = ts_mul(_jacobi_factor_mod2(order), _spread(bits, 16, order))
    bad = [{"exponent": e, "lhs": a, "rhs": b} for e, (a, b) in enumerate(zip(lhs, rhs)) if a != b]
    return CheckReport("parity-self-similarity", _status(bad), {"K": k, "order": order}, bad)


def odd_coefficient_gaps(order: int) -> tuple[list[int], list[int]]:
    """Exponents carrying odd coefficients of J(q) mod 2, and the gaps between them.

    Observational only; no growth law is asserted.
    """
    j = _jacobi_factor_mod2(order)
    positions = [e for e, b in enumerate(j) if b]
    return positions, [b - a for a, b in zip(positions, positions[1:])]


def check_lehner(k_max: int) -> CheckReport:
    """a(2k) = 0 (mod 2^11) and a(3k) = 0 (mod 3^5) for 0 < k <= k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    a2 = j_coefficients(2 * k_max, CoefficientRing.mod(2**11))
    a3 = j_coefficients(3 * k_max, CoefficientRing.mod(3**5))
    bad = [{"family": "2^11", "n": 2 * k, "residue": a2[2 * k]} for k in range(1, k_max + 1) if a2[2 * k]]
    bad += [{"family": "3^5", "n": 3 * k, "residue": a3[3 * k]} for k in range(1, k_max + 1) if a3[3 * k]]
    return CheckReport("lehner", _status(bad), {"k_max": k_max}, bad)


def check_j_congruence(order: int, m: int) -> CheckReport:
    """Yau-Zaslow series = q*j(q) coefficient-wise mod m, m in {16, 9}."""
    if m not in (16, 9):
        raise ValueError(f"modulus must be 16 or 9, got {m}")
    if order < 0:
        raise ValueError("order must be non-negative")
    ring = CoefficientRing.mod(m)
    c = yau_zaslow_series(order, ring)
    qj = klein_qj_series(order, ring)
    bad = [{"exponent": e, "c_mod": x, "qj_mod": y} for e, (x, y) in enumerate(zip(c, qj)) if x != y]
    return CheckReport("j-congruence", _status(bad), {"order": order, "modulus": m}, bad)


def check_3dissection(k: int, order: int) -> CheckReport:
    """In prod (1 - q^n)^(3k): exponents = 1 (mod 3) carry multiples of 3,
    exponents = 2 (mod 3) carry multiples of 9."""
    if order < 0:
        raise ValueError("order must be non-negative")
    s = ts_factor_product(1, -1, 3 * k, order, CoefficientRing.mod(9))
    bad = []
    for e, x in enumerate(s):
        if e % 3 == 1 and x % 3:
            bad.append({"exponent": e, "residue_mod9": x, "required": 3})
        elif e % 3 == 2 and x:
            bad.append({"exponent": e, "residue_mod9": x, "required": 9})
    return CheckReport("3-dissection", _status(bad), {"k": k, "order": order}, bad)


def check_theta_ninth_power(order: int) -> CheckReport:
    """theta^9 = E(q^3) (mod 9): zero residues off multiples of 3."""
    if order < 0:
        raise ValueError("order must be non-negative")
    s = ts_pow(gauss_theta_series(order, CoefficientRing.mod(9)), 9)
    bad = [{"exponent": e, "residue_mod9": x} for e, x in enumerate(s) if e % 3 and x]
    return CheckReport("theta-ninth-power", _status(bad), {"order": order}, bad)


def check_mod2_collapse(t: RealTopology, order: int) -> CheckReport:
    """Both generating functions reduce to prod (1 - q^(8n))^(-3) mod 2."""
    t.require_checked()
    target = ts_factor_product(8, -1, -3, order, _Z2)
    w = welschinger_series(t, order, _Z2)
    c = yau_zaslow_series(order, _Z2)
    bad = [{"series": "w", "exponent": e} for e, (x, y) in enumerate(zip(w, target)) if x != y]
    bad += [{"series": "c", "exponent": e} for e, (x, y) in enumerate(zip(c, target)) if x != y]
    return CheckReport("mod2-collapse", _status(bad), {"e_R": t.e_r, "order": order}, bad)

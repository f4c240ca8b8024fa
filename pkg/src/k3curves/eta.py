"""Named q-expansions: complex and real curve-count generating functions,
the Gauss theta series, the reciprocal square root of Delta(2z), E4 and q*j(q).

Every expression here is arranged so that the q^(1/24) eta prefactors
cancel; only integral-exponent q-series are ever built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import ZZ, CoefficientRing, TruncatedSeries, ts_factor_product, ts_mul, ts_pow

__all__ = [
    "E_C",
    "ER_MIN",
    "ER_MAX",
    "InvalidTopologyError",
    "RealTopology",
    "all_topologies",
    "yau_zaslow_series",
    "welschinger_series",
    "gauss_theta_series",
    "inv_sqrt_delta_series",
    "welschinger_via_eta_quotient",
    "sigma3",
    "eisenstein_e4_series",
    "klein_qj_series",
    "j_coefficients",
    "clear_caches",
]

# Euler characteristic of a K3 surface.
E_C = 24
ER_MIN, ER_MAX = -18, 20


class InvalidTopologyError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class RealTopology:
    """Euler characteristic ``e_R`` of the real locus of a real K3 surface.

    ``e_R`` must be even.  Values outside [-18, 20] are only accepted with
    ``unchecked=True``; such topologies can be expanded but are refused by
    the congruence and monotonicity checks.
    """

    e_r: int
    unchecked: bool = False

    def __post_init__(self):
        if not isinstance(self.e_r, int) or isinstance(self.e_r, bool):
            raise InvalidTopologyError(f"e_R must be an integer, got {self.e_r!r}")
        if self.e_r % 2:
            raise InvalidTopologyError(f"e_R must be even, got {self.e_r}")
        if not self.unchecked and not ER_MIN <= self.e_r <= ER_MAX:
            raise InvalidTopologyError(f"e_R={self.e_r} outside [{ER_MIN}, {ER_MAX}]")

    @property
    def e_c(self) -> int:
        return E_C

    @property
    def realizable_range(self) -> bool:
        return ER_MIN <= self.e_r <= ER_MAX

    def require_checked(self):
        if self.unchecked and not self.realizable_range:
            raise InvalidTopologyError(
                f"e_R={self.e_r} was built unchecked; those checks only cover [{ER_MIN}, {ER_MAX}]"
            )

    def __str__(self):
        return f"e_R={self.e_r}"


def all_topologies() -> list[RealTopology]:
    return [RealTopology(e) for e in range(ER_MIN, ER_MAX + 1, 2)]


def _as_topology(t) -> RealTopology:
    return t if isinstance(t, RealTopology) else RealTopology(t)


@lru_cache(maxsize=64)
def yau_zaslow_series(order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """sum c_g q^g = prod (1 - q^s)^(-24)."""
    return ts_factor_product(1, -1, -E_C, order, ring)


@lru_cache(maxsize=256)
def welschinger_series(t: RealTopology, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """sum w_g q^g = prod (1 + q^r)^(-e_R) * prod (1 - q^(2s))^(-(24 - e_R)/2)."""
    t = _as_topology(t)
    first = ts_factor_product(1, 1, -t.e_r, order, ring)
    second = ts_factor_product(2, -1, -(E_C - t.e_r) // 2, order, ring)
    return ts_mul(first, second)


@lru_cache(maxsize=64)
def gauss_theta_series(order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """1 + 2 * sum_{n>=1} (-1)^n q^(n^2)."""
    if order < 0:
        raise ValueError("order must be non-negative")
    cs = [0] * (order + 1)
    cs[0] = 1
    n = 1
    while n * n <= order:
        cs[n * n] = 2 if n % 2 == 0 else -2
        n += 1
    return TruncatedSeries(cs, ring)


@lru_cache(maxsize=64)
def inv_sqrt_delta_series(order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """q / sqrt(Delta(2z)) = prod (1 - q^(2n))^(-12)."""
    return ts_factor_product(2, -1, -12, order, ring)


def welschinger_via_eta_quotient(t: RealTopology, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """Real generating function rebuilt as (q/sqrt(Delta(2z))) * theta^(e_R/2).

    Negative half-exponents invert the theta series (constant term 1).
    """
    t = _as_topology(t)
    theta_power = ts_pow(gauss_theta_series(order, ring), t.e_r // 2)
    return ts_mul(inv_sqrt_delta_series(order, ring), theta_power)


def sigma3(n: int) -> int:
    if n < 1:
        raise ValueError(f"sigma3 needs n >= 1, got {n}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**3
            e = n // d
            if e != d:
                total += e**3
        d += 1
    return total


def _sigma3_table(order: int) -> list[int]:
    table = [0] * (order + 1)
    for d in range(1, order + 1):
        cube = d**3
        for k in range(d, order + 1, d):
            table[k] += cube
    return table


@lru_cache(maxsize=32)
def eisenstein_e4_series(order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """E4 = 1 + 240 * sum sigma3(n) q^n."""
    if order < 0:
        raise ValueError("order must be non-negative")
    table = _sigma3_table(order)
    return TruncatedSeries([1] + [240 * s for s in table[1:]], ring)


@lru_cache(maxsize=32)
def klein_qj_series(order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """q*j(q) = E4^3 / prod (1 - q^n)^24.

    Coefficient of q^(n+1) is the j-coefficient a(n); the constant term is
    the shifted 1/q pole.
    """
    e4 = eisenstein_e4_series(order, ring)
    return ts_mul(ts_pow(e4, 3), yau_zaslow_series(order, ring))


def j_coefficients(n_max: int, ring: CoefficientRing = ZZ) -> list[int]:
    """a(0), ..., a(n_max) where j(q) = 1/q + sum a(n) q^n."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    return list(klein_qj_series(n_max + 1, ring).coeffs[1:])


def clear_caches():
    """Drop memoized expansions (used before timing runs)."""
    for fn in (
        yau_zaslow_series,
        welschinger_series,
        gauss_theta_series,
        inv_sqrt_delta_series,
        eisenstein_e4_series,
        klein_qj_series,
    ):
        fn.cache_clear()

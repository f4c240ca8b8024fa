"""Partition numbers, Hardy-Ramanujan estimates and log-scale growth predictions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Union

from .eta import E_C, RealTopology, welschinger_series, yau_zaslow_series

__all__ = [
    "partition_P",
    "partition_Q",
    "partition_numbers",
    "hr_estimate",
    "convolution_exponent",
    "growth_ratio",
    "AsymptoteModel",
    "predicted_log_count",
    "big_log",
    "ConvergenceRow",
    "convergence_report",
]

Target = Union[RealTopology, Literal["complex"]]

_P = [1]


def partition_numbers(n_max: int) -> list[int]:
    """P(0..n_max) by Euler's pentagonal recurrence (memoized)."""
    for n in range(len(_P), n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * _P[n - g1]
            g2 = g1 + k
            if g2 <= n:
                total += sign * _P[n - g2]
            k += 1
        _P.append(total)
    return _P[: n_max + 1]


def partition_P(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return partition_numbers(n)[n]


def partition_Q(n: int) -> int:
    """Partitions into distinct parts.

    prod (1 + q^n) = prod (1 - q^(2n)) / prod (1 - q^n), and the numerator
    is the pentagonal series in q^2, so Q(n) = sum_k (-1)^k P(n - k(3k-1)).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    p = partition_numbers(n)
    total = p[n]
    k = 1
    while True:
        g1 = k * (3 * k - 1)
        if g1 > n:
            break
        sign = -1 if k % 2 else 1
        total += sign * p[n - g1]
        g2 = k * (3 * k + 1)
        if g2 <= n:
            total += sign * p[n - g2]
        k += 1
    return total


def hr_estimate(kind: str, n: int) -> float:
    """Leading Hardy-Ramanujan term for P(n) or Q(n); no correction terms."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "P":
        return math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))
    if kind == "Q":
        return math.exp(math.pi * math.sqrt(n / 3)) / (4 * 3**0.25 * n**0.75)
    raise ValueError(f"kind must be 'P' or 'Q', got {kind!r}")


def convolution_exponent(a: float, b: float, alpha: float) -> float:
    """Constant c with log p_n ~ (c n)^alpha for the product of two series
    whose coefficients grow like exp((a n)^alpha) and exp((b n)^alpha)."""
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    p = alpha / (1 - alpha)
    return (a**p + b**p) ** (1 / p)


def growth_ratio(e_r: int) -> float:
    """rho in log|w_g| ~ rho * log c_g (e_R != 0)."""
    if e_r > 0:
        return 0.5
    if e_r < 0:
        return math.sqrt((E_C - 3 * e_r) / (4 * E_C))
    raise ValueError("rho is only defined for e_R != 0; use even indices with e_R = 0")


@dataclass(frozen=True)
class AsymptoteModel:
    """Closed-form predictor for log|w_n| (or log c_n when e_r is None)."""

    e_r: int | None
    rho: float

    @classmethod
    def for_target(cls, target: Target) -> AsymptoteModel:
        if target == "complex":
            return cls(None, 1.0)
        e = target.e_r
        # e_R = 0: even indices grow at half the complex rate
        return cls(e, 0.5 if e == 0 else growth_ratio(e))

    def predict(self, n: int) -> float:
        if n < 1:
            raise ValueError("n must be >= 1")
        if self.e_r == 0 and n % 2:
            raise ValueError("e_R = 0 predictions exist for even n only (odd w_n vanish)")
        return 4 * math.pi * self.rho * math.sqrt(n)


def predicted_log_count(target: Target, n: int) -> float:
    """Predicted log|w_n| for a topology, or log c_n for ``"complex"``.

    complex: 4 pi sqrt(n); e_R > 0: 2 pi sqrt(n);
    e_R < 0: pi sqrt(4 (24 - 3 e_R)/24 * n); e_R = 0, n even: 2 pi sqrt(n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if target == "complex":
        return 4 * math.pi * math.sqrt(n)
    e = target.e_r
    if e < 0:
        return math.pi * math.sqrt(4 * (E_C - 3 * e) / E_C * n)
    if e > 0:
        return 2 * math.pi * math.sqrt(n)
    if n % 2:
        raise ValueError("e_R = 0 predictions exist for even n only (odd w_n vanish)")
    return 2 * math.pi * math.sqrt(2 * (n // 2))


_LOG2 = math.log(2)


def big_log(x: int) -> float:
    """Natural log of a positive integer of any size.

    bit_length * log 2 plus the log of the top 64 bits; relative accuracy
    is far better than 12 significant digits.
    """
    if x <= 0:
        raise ValueError("big_log needs a positive integer")
    shift = max(0, x.bit_length() - 64)
    return math.log(x >> shift) + shift * _LOG2


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    log_count: float | None
    prediction: float | None
    ratio: float | None
    note: str = ""

    @property
    def skipped(self) -> bool:
        return self.ratio is None

    @property
    def error(self) -> float:
        return abs(self.ratio - 1)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "log_count": self.log_count,
            "prediction": self.prediction,
            "ratio": self.ratio,
            "note": self.note,
        }


def convergence_report(target: Target, n_points: Iterable[int]) -> list[ConvergenceRow]:
    """Compare log|w_n| (or log c_n) with its prediction at each n.

    One exact expansion to max(n_points) is shared across rows; rows with
    w_n = 0 are skipped with a reason.
    """
    points = list(n_points)
    if not points:
        return []
    if min(points) < 1:
        raise ValueError("points must be >= 1")
    top = max(points)
    if target == "complex":
        coeffs = yau_zaslow_series(top).coeffs
    else:
        target.require_checked()
        coeffs = welschinger_series(target, top).coeffs
    rows = []
    for n in points:
        value = abs(coeffs[n])
        if value == 0:
            rows.append(ConvergenceRow(n, None, None, None, "w_n = 0"))
            continue
        log_count = big_log(value)
        prediction = predicted_log_count(target, n)
        rows.append(ConvergenceRow(n, log_count, prediction, log_count / prediction))
    return rows

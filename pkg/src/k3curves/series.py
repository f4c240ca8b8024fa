"""Truncated formal power series over the integers or over Z/mZ.

A :class:`TruncatedSeries` carries its own truncation order ``N`` and holds
the coefficients of ``q^0 .. q^N``.  Binary operations truncate to the
smaller of the two orders; they never raise on an order mismatch.

Exact coefficients are Python ints (they outgrow any fixed width quickly).
Residue coefficients are kept in ``[0, m)`` and are pushed through int64
numpy kernels whenever the accumulated sums provably fit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "CoefficientRing",
    "ZZ",
    "RingMismatchError",
    "NonUnitError",
    "TruncatedSeries",
    "ts_mul",
    "ts_inverse",
    "ts_pow",
    "ts_factor_product",
    "ts_reduce_mod",
    "ts_dissect",
    "one",
]

_INT64_HEADROOM = 2**62

# Operands with at most this many nonzero terms go through the sparse kernels.
SPARSE_LIMIT = 32


class RingMismatchError(ValueError):
    pass


class NonUnitError(ArithmeticError):
    pass


@dataclass(frozen=True)
class CoefficientRing:
    """Either the exact integers (``modulus is None``) or Z/mZ with m >= 2."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @classmethod
    def mod(cls, m: int) -> CoefficientRing:
        return cls(int(m))

    @property
    def kind(self) -> str:
        return "exact-integer" if self.modulus is None else "residues-mod-m"

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    def reduce(self, x: int) -> int:
        return x if self.modulus is None else x % self.modulus

    def unit_inverse(self, x: int) -> int:
        if self.modulus is None:
            if x in (1, -1):
                return x
            raise NonUnitError(f"{x} is not a unit in Z")
        try:
            return pow(x, -1, self.modulus)
        except ValueError:
            raise NonUnitError(f"{x} is not a unit mod {self.modulus}") from None

    def dtype(self, terms: int):
        """numpy dtype able to hold a sum of ``terms`` products of reduced entries."""
        if self.modulus is None:
            return object
        if (self.modulus - 1) ** 2 * max(terms, 1) + self.modulus < _INT64_HEADROOM:
            return np.int64
        return object

    def __str__(self):
        return "ZZ" if self.modulus is None else f"Z/{self.modulus}"


ZZ = CoefficientRing()


class TruncatedSeries:
    """Immutable truncated power series ``a_0 + a_1 q + ... + a_N q^N``."""

    __slots__ = ("_ring", "_coeffs")

    def __init__(self, coeffs: Iterable[int], ring: CoefficientRing = ZZ, order: int | None = None):
        cs = [int(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = cs[: order + 1] + [0] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        if ring.modulus is not None:
            m = ring.modulus
            cs = [c % m for c in cs]
        object.__setattr__(self, "_ring", ring)
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def _trusted(cls, coeffs: tuple, ring: CoefficientRing) -> TruncatedSeries:
        # Skips normalisation; callers guarantee reduced Python ints.
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_ring", ring)
        object.__setattr__(obj, "_coeffs", coeffs)
        return obj

    @classmethod
    def _from_array(cls, arr: np.ndarray, ring: CoefficientRing) -> TruncatedSeries:
        if ring.modulus is not None:
            arr = arr % ring.modulus
        return cls._trusted(tuple(arr.tolist()), ring)

    @property
    def ring(self) -> CoefficientRing:
        return self._ring

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, k):
        return self._coeffs[k]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._ring == other._ring and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._ring, self._coeffs))

    def __repr__(self):
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if len(self._coeffs) > 8 else ""
        return f"TruncatedSeries([{head}{tail}], ring={self._ring}, order={self.order})"

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries._trusted(self._coeffs[: order + 1], self._ring)

    def nonzero_terms(self) -> list[tuple[int, int]]:
        return [(k, c) for k, c in enumerate(self._coeffs) if c]

    def to_array(self, dtype=None) -> np.ndarray:
        if dtype is None:
            dtype = self._ring.dtype(len(self._coeffs))
        return np.array(self._coeffs, dtype=dtype)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        _check_ring(self, other)
        n = min(len(self), len(other))
        return TruncatedSeries([a + b for a, b in zip(self._coeffs[:n], other._coeffs[:n])], self._ring)

    def __neg__(self):
        return TruncatedSeries([-a for a in self._coeffs], self._ring)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ts_mul(self, other)
        if isinstance(other, int):
            return TruncatedSeries([other * a for a in self._coeffs], self._ring)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return ts_pow(self, k)


def one(order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    return TruncatedSeries._trusted((1,) + (0,) * order, ring)


def _check_ring(a: TruncatedSeries, b: TruncatedSeries):
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring} vs {b.ring}")


def _mul_sparse_dense(terms: Sequence[tuple[int, int]], dense: np.ndarray, n: int, dtype) -> np.ndarray:
    out = np.zeros(n + 1, dtype=dtype)
    for k, c in terms:
        if k > n:
            break
        out[k:] += c * dense[: n + 1 - k]
    return out


def ts_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product truncated to ``min(a.order, b.order)``."""
    _check_ring(a, b)
    ring = a.ring
    n = min(a.order, b.order)
    ta = [(k, c) for k, c in enumerate(a.coeffs[: n + 1]) if c]
    tb = [(k, c) for k, c in enumerate(b.coeffs[: n + 1]) if c]
    if len(ta) > len(tb):
        ta, tb = tb, ta
        a, b = b, a
    dtype = ring.dtype(len(ta))
    if dtype is np.int64 and len(ta) > SPARSE_LIMIT:
        # direct (non-FFT) convolution in C
        out = np.convolve(a.to_array(np.int64)[: n + 1], b.to_array(np.int64)[: n + 1])[: n + 1]
    else:
        out = _mul_sparse_dense(ta, b.to_array(dtype)[: n + 1], n, dtype)
    return TruncatedSeries._from_array(out, ring)


def ts_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse to the same order; needs a unit constant term."""
    ring = a.ring
    inv0 = ring.unit_inverse(a[0])
    n = a.order
    m = ring.modulus
    terms = [(k, c) for k, c in a.nonzero_terms() if k > 0]
    if len(terms) <= SPARSE_LIMIT:
        b = [0] * (n + 1)
        b[0] = ring.reduce(inv0)
        for i in range(1, n + 1):
            s = 0
            for k, c in terms:
                if k > i:
                    break
                s += c * b[i - k]
            s = -inv0 * s
            b[i] = s if m is None else s % m
        return TruncatedSeries._trusted(tuple(b), ring)

    dtype = ring.dtype(n + 1)
    arr = a.to_array(dtype)
    b = np.zeros(n + 1, dtype=dtype)
    b[0] = ring.reduce(inv0)
    for i in range(1, n + 1):
        s = -inv0 * np.dot(arr[1 : i + 1], b[i - 1 :: -1])
        b[i] = s if m is None else s % m
    return TruncatedSeries._from_array(b, ring)


def ts_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """``a**k``; negative ``k`` goes through :func:`ts_inverse`."""
    if k < 0:
        return ts_pow(ts_inverse(a), -k)
    result = one(a.order, a.ring)
    base = a
    while k:
        if k & 1:
            result = ts_mul(result, base)
        k >>= 1
        if k:
            base = ts_mul(base, base)
    return result


def _binomial_terms(e: int, count: int, sign: int, ring: CoefficientRing) -> list[tuple[int, int]]:
    """Nonzero coefficients of (1 + sign*x)^e up to x^count, as (j, c_j)."""
    out = [(0, 1)]
    c = 1
    for j in range(1, count + 1):
        c = c * (e - j + 1) // j
        if c == 0 and e >= 0:
            break
        cj = ring.reduce(c if sign > 0 or j % 2 == 0 else -c)
        if cj:
            out.append((j, cj))
    return out


def ts_factor_product(step: int, sign: int, exponent: int, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """Expand ``prod_{s>=1} (1 + sign*q^(step*s))^exponent`` up to ``q^order``.

    Only factors with ``step*s <= order`` matter.  Each one is applied as
    its binomial expansion in ``x = q^(step*s)``, which for negative
    exponents is the power of the factor's inverse series.
    """
    if step < 1:
        raise ValueError("step must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if order < 0:
        raise ValueError("order must be non-negative")
    dtype = ring.dtype(order + 1)
    f = np.zeros(order + 1, dtype=dtype)
    f[0] = 1
    if exponent == 0:
        return TruncatedSeries._from_array(f, ring)
    m = ring.modulus
    for k in range(step, order + 1, step):
        terms = _binomial_terms(exponent, order // k, sign, ring)
        g = f.copy()
        for j, c in terms[1:]:
            shift = j * k
            g[shift:] += c * f[: order + 1 - shift]
        f = g if m is None else g % m
    return TruncatedSeries._from_array(f, ring)


def ts_reduce_mod(a: TruncatedSeries, m: int) -> TruncatedSeries:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if not a.ring.is_exact:
        if a.ring.modulus % m:
            raise RingMismatchError(f"cannot reduce {a.ring} to Z/{m}")
    return TruncatedSeries(a.coeffs, CoefficientRing.mod(m))


def ts_dissect(a: TruncatedSeries, j: int, r: int) -> list[int]:
    """Coefficients at exponents ``r, r+j, r+2j, ...`` up to the order of ``a``."""
    if j < 1:
        raise ValueError("j must be positive")
    if not 0 <= r < j:
        raise ValueError(f"residue {r} out of range for j={j}")
    return list(a.coeffs[r::j])

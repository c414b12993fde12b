"""Truncated complex power series.

A function analytic on the unit disk is represented by the first N+1
Taylor coefficients at the origin::

    f(z) = f_0 + f_1 z + f_2 z^2 + ... + f_N z^N

``PowerSeries`` stores the coefficient array (complex double precision,
index = degree) and is immutable after construction.  All operations are
pure functions that return new series.  Truncation is silent and by
contract: every operation that can grow the degree takes an explicit
output order, and coefficients above it are discarded.

The default working order used throughout the package is
``DEFAULT_ORDER`` = 256, chosen so that kernel sums and banded operator
compressions reach truncation errors below 1e-10 for arguments of
modulus <= 0.9.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError

DEFAULT_ORDER = 256


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Truncated Taylor expansion; ``coeffs[n]`` is the degree-n coefficient."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128)).copy()
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d sequence")
        if not np.all(np.isfinite(c.view(np.float64))):
            raise DomainError("non-finite coefficient")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def degree(self) -> int:
        """Largest index with a nonzero coefficient (-1 for the zero series)."""
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) if nz.size else -1

    def coefficient(self, n: int) -> complex:
        """Degree-n coefficient; zero above the stored order."""
        return complex(self.coeffs[n]) if 0 <= n <= self.order else 0j

    def __call__(self, z: complex) -> complex:
        return evaluate(self, z)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        return add(self, other)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return add(self, scale(other, -1.0))

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSeries) and np.array_equal(self.coeffs, other.coeffs)


def from_coefficients(coeffs: Iterable[complex]) -> PowerSeries:
    return PowerSeries(np.asarray(list(coeffs), dtype=np.complex128))


def zero(order: int = 0) -> PowerSeries:
    return PowerSeries(np.zeros(order + 1, dtype=np.complex128))


def one(order: int = 0) -> PowerSeries:
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = 1.0
    return PowerSeries(c)


def monomial(k: int, order: int | None = None) -> PowerSeries:
    """The series z**k, stored at the given order (default k)."""
    order = k if order is None else order
    if order < k:
        raise ValueError("order too small to hold the monomial")
    c = np.zeros(order + 1, dtype=np.complex128)
    c[k] = 1.0
    return PowerSeries(c)


def truncate(f: PowerSeries, order: int) -> PowerSeries:
    """Resize to the given order, padding with zeros or dropping the tail."""
    if order < 0:
        raise ValueError("order must be >= 0")
    c = np.zeros(order + 1, dtype=np.complex128)
    m = min(order, f.order) + 1
    c[:m] = f.coeffs[:m]
    return PowerSeries(c)


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    order = max(a.order, b.order)
    c = np.zeros(order + 1, dtype=np.complex128)
    c[: a.order + 1] += a.coeffs
    c[: b.order + 1] += b.coeffs
    return PowerSeries(c)


def scale(f: PowerSeries, factor: complex) -> PowerSeries:
    return PowerSeries(f.coeffs * factor)


def cauchy_product(a: PowerSeries, b: PowerSeries, order: int) -> PowerSeries:
    """Product series truncated at ``order``.

    Coefficient k of the result is sum_{j<=k} a_j b_{k-j}; degrees above
    ``order`` are silently discarded.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    full = np.convolve(a.coeffs, b.coeffs)
    c = np.zeros(order + 1, dtype=np.complex128)
    m = min(order + 1, len(full))
    c[:m] = full[:m]
    return PowerSeries(c)


def power(f: PowerSeries, k: int, order: int) -> PowerSeries:
    """k-th power by repeated truncated multiplication."""
    if k < 0:
        raise ValueError("exponent must be >= 0")
    out = one(order)
    for _ in range(k):
        out = cauchy_product(out, f, order)
    return out


def derivative(f: PowerSeries) -> PowerSeries:
    """Termwise derivative; the order drops by one (constants map to [0])."""
    if f.order == 0:
        return zero(0)
    n = np.arange(1, f.order + 1)
    return PowerSeries(n * f.coeffs[1:])


def compose(f: PowerSeries, phi: PowerSeries, order: int) -> PowerSeries:
    """Truncated Taylor expansion of f(phi(z)).

    Horner accumulation over the coefficients of f with every intermediate
    product truncated at ``order``.  Requires |phi(0)| < 1 strictly: for a
    symbol that is not a disk self-map near the origin the composed series
    need not converge, so such symbols are rejected rather than handled by
    limits.
    """
    if abs(phi.coeffs[0]) >= 1.0:
        raise DomainError("composition symbol has |constant term| >= 1")
    if order < 0:
        raise ValueError("order must be >= 0")
    acc = zero(order)
    for k in range(f.order, -1, -1):
        acc = cauchy_product(acc, phi, order)
        if f.coeffs[k] != 0:
            c = acc.coeffs.copy()
            c.setflags(write=True)
            c[0] += f.coeffs[k]
            acc = PowerSeries(c)
    return acc


def reciprocal(f: PowerSeries, order: int) -> PowerSeries:
    """Multiplicative inverse series g with (f*g)(z) = 1 + O(z^{order+1}).

    Standard recurrence: g_0 = 1/f_0 and
    g_k = -(1/f_0) * sum_{j=1..k} f_j g_{k-j}.
    """
    f0 = complex(f.coeffs[0])
    if f0 == 0:
        raise DomainError("reciprocal of a series with zero constant term")
    if order < 0:
        raise ValueError("order must be >= 0")
    a = np.zeros(order + 1, dtype=np.complex128)
    m = min(order, f.order) + 1
    a[:m] = f.coeffs[:m]
    g = np.zeros(order + 1, dtype=np.complex128)
    g[0] = 1.0 / f0
    for k in range(1, order + 1):
        g[k] = -(a[1 : k + 1] @ g[k - 1 :: -1]) / f0
    return PowerSeries(g)


def evaluate(f: PowerSeries, z: complex) -> complex:
    """Horner evaluation of the truncated series.

    Documented accuracy region is |z| <= 1; nothing stops evaluation
    outside it, but the truncation tail is then unbounded.
    """
    acc = 0j
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc)


def evaluate_many(f: PowerSeries, z: np.ndarray) -> np.ndarray:
    """Vectorized Horner evaluation at an array of points."""
    acc = np.zeros_like(z, dtype=np.complex128)
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return acc


def to_pairs(f: PowerSeries) -> list[list[float]]:
    """JSON form: array of [re, im] pairs, index = degree."""
    return [[float(c.real), float(c.imag)] for c in f.coeffs]


def from_pairs(pairs: Sequence[Sequence[float]]) -> PowerSeries:
    coeffs = [complex(p[0], p[1]) for p in pairs]
    return from_coefficients(coeffs)

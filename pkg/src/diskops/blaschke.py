"""Disk automorphisms, finite Blaschke products, and circle quadrature.

The building block is the involution phi_a(z) = (a - z)/(1 - conj(a) z),
whose Taylor expansion is

    phi_a(z) = a - (1 - |a|^2) sum_{n>=1} conj(a)^{n-1} z^n.

A finite Blaschke product is a unimodular constant times a product of
such factors; it is inner, with |psi| = 1 on the boundary circle.

Circle integrals use the composite trapezoidal rule on equispaced nodes,
which is spectrally accurate for the smooth periodic integrands that
appear here (Poisson kernels and their products).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import series as ps
from . import spaces
from . import report as rp
from .errors import DomainError
from .series import PowerSeries

DEFAULT_QUAD_NODES = 4096


@dataclass(frozen=True)
class MobiusMap:
    """The disk automorphism phi_a swapping 0 and a (|a| < 1)."""

    alpha: complex

    def __post_init__(self):
        if abs(self.alpha) >= 1.0:
            raise DomainError("Mobius parameter must lie in the open disk")
        object.__setattr__(self, "alpha", complex(self.alpha))

    def __call__(self, z):
        return (self.alpha - z) / (1.0 - np.conj(self.alpha) * z)

    def series(self, order: int) -> PowerSeries:
        a = self.alpha
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = a
        if order >= 1:
            c[1:] = -(1.0 - abs(a) ** 2) * np.conj(a) ** np.arange(order)
        return PowerSeries(c)

    def derivative_series(self, order: int) -> PowerSeries:
        # phi_a'(z) = (|a|^2 - 1) sum (n+1) conj(a)^n z^n
        a = self.alpha
        n = np.arange(order + 1)
        return PowerSeries((abs(a) ** 2 - 1.0) * (n + 1) * np.conj(a) ** n)


@dataclass(frozen=True)
class BlaschkeProduct:
    """unimodular * product of phi_{zero} factors over the listed zeros."""

    unimodular: complex = 1.0 + 0j
    zeros: tuple[complex, ...] = ()

    def __post_init__(self):
        a = complex(self.unimodular)
        if abs(abs(a) - 1.0) > 1e-12:
            raise DomainError("leading constant must be unimodular")
        zs = tuple(complex(z) for z in self.zeros)
        if any(abs(z) >= 1.0 for z in zs):
            raise DomainError("Blaschke zeros must lie in the open disk")
        object.__setattr__(self, "unimodular", a)
        object.__setattr__(self, "zeros", zs)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, z):
        out = self.unimodular * np.ones_like(np.asarray(z, dtype=np.complex128))
        for alpha in self.zeros:
            out = out * (alpha - z) / (1.0 - np.conj(alpha) * z)
        return out if np.ndim(z) else complex(out)

    def series(self, order: int) -> PowerSeries:
        """Truncated Taylor expansion; tail is O(max|zero|^order)."""
        out = ps.one(order)
        for alpha in self.zeros:
            out = ps.cauchy_product(out, MobiusMap(alpha).series(order), order)
        return ps.scale(out, self.unimodular)

    def tail_bound(self, order: int) -> float:
        """Crude bound on sum_{n>order} |psi_n| from the factor expansions.

        Each factor has |coefficient_n| <= r^(n-1) (r = max zero modulus),
        so the product of d factors is dominated by n^(d-1) r^(n-d).
        """
        if not self.zeros:
            return 0.0
        r = max(abs(z) for z in self.zeros)
        if r == 0.0:
            return 0.0 if order >= self.degree else 1.0
        d = self.degree
        n = np.arange(order + 1, order + 2000)
        return float(np.sum(n ** (d - 1) * r ** (n - d)))

    def to_dict(self) -> dict:
        return {
            "a": [self.unimodular.real, self.unimodular.imag],
            "zeros": [[z.real, z.imag] for z in self.zeros],
        }

    @staticmethod
    def from_dict(d: dict) -> "BlaschkeProduct":
        a = complex(d["a"][0], d["a"][1])
        zeros = tuple(complex(z[0], z[1]) for z in d["zeros"])
        return BlaschkeProduct(a, zeros)


def z_times_phi(alpha: complex) -> BlaschkeProduct:
    """The degree-2 product z * phi_alpha (note z = -phi_0)."""
    return BlaschkeProduct(-1.0, (0j, complex(alpha)))


def phi_pair(alpha: complex) -> BlaschkeProduct:
    """The degree-2 product phi_alpha * phi_{-alpha}."""
    alpha = complex(alpha)
    return BlaschkeProduct(1.0, (alpha, -alpha))


def blaschke_series(psi: BlaschkeProduct, order: int) -> PowerSeries:
    return psi.series(order)


# ---------------------------------------------------------------------------
# circle quadrature
# ---------------------------------------------------------------------------


@lru_cache(maxsize=16)
def circle_nodes(nodes: int) -> np.ndarray:
    """Equispaced boundary points exp(2 pi i j / nodes)."""
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    return np.exp(1j * theta)


def circle_mean(values: np.ndarray) -> complex:
    """Trapezoidal value of (1/2 pi) integral over the circle."""
    return complex(np.mean(values))


def poisson_kernel(alpha: complex, zeta) -> float | np.ndarray:
    """P_alpha(zeta) = (1 - |alpha|^2) / |zeta - alpha|^2 on |zeta| = 1."""
    alpha = complex(alpha)
    if abs(alpha) >= 1.0:
        raise DomainError("Poisson parameter must lie in the open disk")
    zeta_arr = np.asarray(zeta, dtype=np.complex128)
    if np.any(np.abs(np.abs(zeta_arr) - 1.0) > 1e-9):
        raise DomainError("Poisson kernel evaluated off the unit circle")
    out = (1.0 - abs(alpha) ** 2) / np.abs(zeta_arr - alpha) ** 2
    return out if np.ndim(zeta) else float(out)


def poisson_moment(alpha: complex, k: int, nodes: int = DEFAULT_QUAD_NODES) -> complex:
    """Quadrature value of (1/2 pi) integral P_alpha(zeta) conj(zeta)^k |dzeta|.

    Equals conj(alpha)^k exactly (harmonic extension of conj(zeta)^k).
    """
    zeta = circle_nodes(nodes)
    return circle_mean(poisson_kernel(alpha, zeta) * np.conj(zeta) ** k)


def _check_node_count(nodes: int):
    if nodes < 256 or nodes & (nodes - 1):
        raise ValueError("node count must be a power of two >= 256")


def poisson_product_moment(alpha: complex, k: int, nodes: int = DEFAULT_QUAD_NODES) -> complex:
    """Quadrature value of the two-sided Poisson moment

        b(k) = (1/2 pi) integral P_alpha(zeta) P_{-alpha}(zeta) conj(zeta)^k |dzeta|.
    """
    _check_node_count(nodes)
    if abs(alpha) >= 1.0:
        raise DomainError("parameter must lie in the open disk")
    zeta = circle_nodes(nodes)
    integrand = poisson_kernel(alpha, zeta) * poisson_kernel(-alpha, zeta) * np.conj(zeta) ** k
    return circle_mean(integrand)


def poisson_product_moment_closed(alpha: complex, k: int) -> complex:
    """Closed form: b(2l) = ((1-|a|^2)/(1+|a|^2)) conj(a)^{2l}, b(odd) = 0."""
    alpha = complex(alpha)
    if k % 2:
        return 0j
    ratio = (1.0 - abs(alpha) ** 2) / (1.0 + abs(alpha) ** 2)
    return complex(ratio * np.conj(alpha) ** k)


# ---------------------------------------------------------------------------
# derivative moments and the adjoint-symbol expansions
# ---------------------------------------------------------------------------


def phi_prime_moment(alpha: complex, k: int) -> complex:
    """Closed form of the Hardy inner product <phi_a', z^k phi_a'>:

        ((1 + |a|^2)/(1 - |a|^2)) conj(a)^k + k conj(a)^k.
    """
    alpha = complex(alpha)
    if abs(alpha) >= 1.0:
        raise DomainError("parameter must lie in the open disk")
    ak = np.conj(alpha) ** k
    return complex((1.0 + abs(alpha) ** 2) / (1.0 - abs(alpha) ** 2) * ak + k * ak)


def phi_prime_moment_series(alpha: complex, k: int, order: int = 2000) -> complex:
    """Brute-force companion: the same inner product summed from the
    coefficient expansion of phi_a' at the given order."""
    c = MobiusMap(alpha).derivative_series(order + k).coeffs
    return complex(np.sum(c[k:] * np.conj(c[: len(c) - k])))


VARIANT_Z_PHI = "z_phi"
VARIANT_PHI_PAIR = "phi_pair"


def adjoint_variant_product(variant: str, alpha: complex) -> BlaschkeProduct:
    if variant == VARIANT_Z_PHI:
        return z_times_phi(alpha)
    if variant == VARIANT_PHI_PAIR:
        return phi_pair(alpha)
    raise ValueError(f"unknown adjoint variant {variant!r}")


def adjoint_symbol_expansion(variant: str, alpha: complex, k_max: int) -> PowerSeries:
    """Coefficients of (M_psi)* psi in the S2 monomial expansion.

    The function (M_psi)* psi expands as sum_k <psi, z^k psi>_{S2} z^k / w(k)
    with w(k) = k^2 for k >= 1 and w(0) = 1.  Closed forms of the inner
    products for the two degree-2 families:

    z_phi     (psi = z phi_a):
        k = 0:  3 + (1+|a|^2)/(1-|a|^2)
        k >= 1: (2k+2) conj(a)^k + ((1+|a|^2)/(1-|a|^2)) conj(a)^k

    phi_pair  (psi = phi_a phi_{-a}):
        k = 0:  |a|^4 + 2 (1+|a|^2)/(1-|a|^2) + 2 (1-|a|^2)/(1+|a|^2)
        k = 2l: 2 ((1+|a|^2)/(1-|a|^2)) conj(a)^{2l} + 8 l conj(a)^{2l}
                + 2 ((1-|a|^2)/(1+|a|^2)) conj(a)^{2l}
        k odd:  0

    The two-sided Poisson moment enters every nonzero coefficient of the
    second family with weight 2 (once per cross term of the product rule),
    matching the constant term and the brute-force oracle.
    """
    alpha = complex(alpha)
    if abs(alpha) >= 1.0:
        raise DomainError("parameter must lie in the open disk")
    rho = abs(alpha) ** 2
    plus = (1.0 + rho) / (1.0 - rho)
    minus = (1.0 - rho) / (1.0 + rho)
    c = np.zeros(k_max + 1, dtype=np.complex128)
    if variant == VARIANT_Z_PHI:
        c[0] = 3.0 + plus
        for k in range(1, k_max + 1):
            ak = np.conj(alpha) ** k
            c[k] = ((2 * k + 2) * ak + plus * ak) / k**2
    elif variant == VARIANT_PHI_PAIR:
        c[0] = rho**2 + 2.0 * plus + 2.0 * minus
        for l in range(1, k_max // 2 + 1):
            a2l = np.conj(alpha) ** (2 * l)
            c[2 * l] = (2.0 * plus * a2l + 8.0 * l * a2l + 2.0 * minus * a2l) / (4 * l**2)
    else:
        raise ValueError(f"unknown adjoint variant {variant!r}")
    return PowerSeries(c)


def adjoint_symbol_series_oracle(
    variant: str, alpha: complex, k_max: int, order: int = 400
) -> PowerSeries:
    """Brute-force expansion coefficients <psi, z^k psi>_{S2} / w(k) computed
    from the truncated product series; independent of the closed forms."""
    psi = adjoint_variant_product(variant, alpha).series(order)
    space = spaces.s2()
    c = np.zeros(k_max + 1, dtype=np.complex128)
    for k in range(k_max + 1):
        shifted = PowerSeries(np.concatenate([np.zeros(k, dtype=np.complex128), psi.coeffs]))
        ip = spaces.inner_product(space, psi, shifted)
        c[k] = ip / (k**2 if k else 1.0)
    return PowerSeries(c)


def adjoint_distinctness_check(alpha: complex, tol: float = 1e-6) -> rp.VerificationReport:
    """|(M_psi)* psi (0) - (M_psi)* psi (alpha)| for psi = z phi_alpha.

    The gap being nonzero is what obstructs reducibility for these
    degree-2 symbols; the check passes iff it exceeds tol.
    """
    alpha = complex(alpha)
    if alpha == 0:
        raise DomainError("distinctness gap is defined for alpha != 0")
    if abs(alpha) >= 1.0:
        raise DomainError("parameter must lie in the open disk")
    # enough terms that the |alpha|^{2k} tail is below 1e-16
    k_max = 64
    r = abs(alpha) ** 2
    while r**k_max > 1e-16 and k_max < 4096:
        k_max *= 2
    expansion = adjoint_symbol_expansion(VARIANT_Z_PHI, alpha, k_max)
    at_zero = complex(expansion.coeffs[0])
    at_alpha = expansion(alpha)
    gap = abs(at_zero - at_alpha)
    return rp.make_report(
        "adjoint_distinctness",
        computed=[("value_at_0", at_zero), ("value_at_alpha", at_alpha), ("gap", gap)],
        reference=[("gap_lower_bound", tol, rp.PAPER)],
        tolerance=tol,
        status=rp.PASS if gap > tol else rp.FAIL,
    )

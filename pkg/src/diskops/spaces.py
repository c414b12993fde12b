"""Weighted Hardy-type spaces on the unit disk.

Each space is described by its monomial norm sequence
``weight(n) = ||z^n||^2``.  Supported kinds:

====== =============================================
H2     1
A2     1/(n+1)
D2     n+1
S2     1 for n=0, n^2 for n>=1
S12    (n+1)(n+2)/2
S22    1+n^2
Dalpha (1+n)^alpha for real alpha >= 0
Km     (n+1)(n+2)...(n+m+1)/(m+1)!
====== =============================================

The reproducing kernel of every such space is K_w(z) = sum a_n (conj(w) z)^n
with a_n = 1/weight(n).  Closed forms exist for H2, A2, D2 and S12; the
S12 one is

    K_w(z) = (2/t^2) [t + (t-1) ln(1/(1-t))],   t = conj(w) z,

with K_w(z) = 1 at t = 0.  Near the removable singularity (|t| < 1e-3)
the S12 and D2 closed forms lose roughly six digits to cancellation in
the small denominator, so evaluation switches to a 16-term direct sum
there.  The principal branch of the logarithm is used throughout; it is
continuous on the whole domain because |t| < 1 implies Re(1-t) > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import report as rp
from .errors import DomainError, UnsupportedSpaceError
from .series import PowerSeries

H2 = "H2"
A2 = "A2"
D2 = "D2"
S2 = "S2"
S12 = "S12"
S22 = "S22"
DALPHA = "Dalpha"
KM = "Km"

_CLOSED_FORM_KINDS = (H2, A2, D2, S12)
# below this |conj(w) z| the log-based closed forms switch to a short sum
_SMALL_T = 1e-3
_SMALL_T_TERMS = 16


@dataclass(frozen=True)
class SpaceWeights:
    """A named weight sequence weight(n) = ||z^n||^2 > 0."""

    kind: str
    alpha: float = 0.0
    m: int = 0

    def __post_init__(self):
        if self.kind not in (H2, A2, D2, S2, S12, S22, DALPHA, KM):
            raise ValueError(f"unknown space kind {self.kind!r}")
        if self.kind == DALPHA and self.alpha < 0:
            raise ValueError("Dalpha requires alpha >= 0")
        if self.kind == KM and self.m < 1:
            raise ValueError("Km requires a positive integer m")

    @property
    def label(self) -> str:
        if self.kind == DALPHA:
            return f"Dalpha:{self.alpha:g}"
        if self.kind == KM:
            return f"Km:{self.m}"
        return self.kind

    def weight(self, n):
        """||z^n||^2, vectorized over integer arrays."""
        n = np.asarray(n, dtype=np.float64)
        if self.kind == H2:
            w = np.ones_like(n)
        elif self.kind == A2:
            w = 1.0 / (n + 1)
        elif self.kind == D2:
            w = n + 1
        elif self.kind == S2:
            w = np.where(n == 0, 1.0, n * n)
        elif self.kind == S12:
            w = (n + 1) * (n + 2) / 2.0
        elif self.kind == S22:
            w = 1.0 + n * n
        elif self.kind == DALPHA:
            w = (1.0 + n) ** self.alpha
        else:  # KM
            w = np.ones_like(n)
            for i in range(1, self.m + 2):
                w = w * (n + i)
            w /= math.factorial(self.m + 1)
        return w if w.ndim else float(w)

    def weights(self, n_max: int) -> np.ndarray:
        return self.weight(np.arange(n_max + 1))

    def kernel_coeffs(self, n_max: int) -> np.ndarray:
        """a_n = 1/weight(n) for n = 0..n_max."""
        return 1.0 / self.weights(n_max)

    def has_closed_form_kernel(self) -> bool:
        return self.kind in _CLOSED_FORM_KINDS

    def has_bounded_kernel_coeffs(self) -> bool:
        """True when a_n <= 1 for all n (every kind here except A2)."""
        return self.kind != A2 and not (self.kind == DALPHA and self.alpha < 0)


def hardy() -> SpaceWeights:
    return SpaceWeights(H2)


def bergman() -> SpaceWeights:
    return SpaceWeights(A2)


def dirichlet() -> SpaceWeights:
    return SpaceWeights(D2)


def s2() -> SpaceWeights:
    return SpaceWeights(S2)


def s12() -> SpaceWeights:
    return SpaceWeights(S12)


def s22() -> SpaceWeights:
    return SpaceWeights(S22)


def dalpha(alpha: float) -> SpaceWeights:
    return SpaceWeights(DALPHA, alpha=float(alpha))


def km(m: int) -> SpaceWeights:
    return SpaceWeights(KM, m=int(m))


def parse_space(name: str) -> SpaceWeights:
    """Space from its CLI name: H2, A2, D2, S2, S12, S22, Dalpha:2.0, Km:3.

    S32 is accepted as an alias for Dalpha:2.
    """
    base, _, arg = name.partition(":")
    if base == DALPHA:
        return dalpha(float(arg))
    if base == KM:
        return km(int(arg))
    if arg:
        raise ValueError(f"space {base!r} takes no parameter")
    if base == "S32":
        return dalpha(2.0)
    return SpaceWeights(base)


# ---------------------------------------------------------------------------
# norms, inner products, energies
# ---------------------------------------------------------------------------


def space_norm_sq(space: SpaceWeights, f: PowerSeries) -> float:
    """sum weight(n) |f_n|^2 over the stored coefficients."""
    w = space.weights(f.order)
    return float(w @ np.abs(f.coeffs) ** 2)


def space_norm(space: SpaceWeights, f: PowerSeries) -> float:
    """sqrt(sum weight(n) |f_n|^2) over the stored coefficients."""
    return float(np.sqrt(space_norm_sq(space, f)))


def inner_product(space: SpaceWeights, f: PowerSeries, g: PowerSeries) -> complex:
    """sum weight(n) f_n conj(g_n)."""
    n = min(f.order, g.order)
    w = space.weights(n)
    return complex(np.sum(w * f.coeffs[: n + 1] * np.conj(g.coeffs[: n + 1])))


def norm_decomposition_s12(f: PowerSeries) -> tuple[float, float, float]:
    """The three summands ||f||_{H2}^2, ||f'||_{A2}^2, ||f'||_{H2}^2.

    Their combination with factors (1, 3/2, 1/2) equals the squared S12
    norm: the weights satisfy (n+1)(n+2)/2 = 1 + (3/2) n + (1/2) n^2.
    """
    mags = np.abs(f.coeffs) ** 2
    n = np.arange(f.order + 1)
    hardy_sq = float(mags.sum())
    bergman_deriv_sq = float((n * mags).sum())
    hardy_deriv_sq = float((n * n * mags).sum())
    return hardy_sq, bergman_deriv_sq, hardy_deriv_sq


def dirichlet_energy(f: PowerSeries) -> float:
    """D(f) = ||f'||_{A2}^2 = sum_{n>=1} n |f_n|^2."""
    n = np.arange(f.order + 1)
    return float((n * np.abs(f.coeffs) ** 2).sum())


def norm_relation_check(f: PowerSeries, tol: float = 1e-10) -> rp.VerificationReport:
    """Both cross-space norm identities evaluated on one function.

    (a)  2 ||f||_{S12}^2 = ||f||_{S2}^2 + 2 ||f||_{H2}^2 + 3 D(f) - |f(0)|^2
    (b)  ||f||_{S22}^2   = ||f||_{S2}^2 + ||f||_{H2}^2 - |f(0)|^2

    Passes iff both residuals are below tol * (1 + ||f||_{S12}^2).
    """
    s12_sq = space_norm(s12(), f) ** 2
    s2_sq = space_norm(s2(), f) ** 2
    s22_sq = space_norm(s22(), f) ** 2
    h2_sq = space_norm(hardy(), f) ** 2
    f0_sq = abs(f.coeffs[0]) ** 2
    d = dirichlet_energy(f)
    lhs_a = 2.0 * s12_sq
    rhs_a = s2_sq + 2.0 * h2_sq + 3.0 * d - f0_sq
    rhs_b = s2_sq + h2_sq - f0_sq
    bound = tol * (1.0 + s12_sq)
    ok = abs(lhs_a - rhs_a) < bound and abs(s22_sq - rhs_b) < bound
    return rp.make_report(
        "norm_relations",
        computed=[
            ("twice_s12_sq", lhs_a),
            ("s12_identity_rhs", rhs_a),
            ("s22_sq", s22_sq),
            ("s22_identity_rhs", rhs_b),
        ],
        reference=[
            ("s12_identity_residual", 0.0, rp.PAPER),
            ("s22_identity_residual", 0.0, rp.PAPER),
        ],
        tolerance=bound,
        status=rp.PASS if ok else rp.FAIL,
    )


# ---------------------------------------------------------------------------
# reproducing kernels
# ---------------------------------------------------------------------------


def _kernel_argument(w: complex, z: complex) -> complex:
    t = np.conj(w) * z
    if abs(t) >= 1.0:
        raise DomainError("kernel argument |conj(w) z| >= 1")
    return complex(t)


def kernel_eval_series(space: SpaceWeights, w: complex, z: complex, order: int) -> complex:
    """Partial sum of sum a_n (conj(w) z)^n up to the given order."""
    t = _kernel_argument(w, z)
    a = space.kernel_coeffs(order)
    powers = np.empty(order + 1, dtype=np.complex128)
    powers[0] = 1.0
    if order:
        np.cumprod(np.full(order, t, dtype=np.complex128), out=powers[1:])
    return complex(a @ powers)


def _short_sum(space: SpaceWeights, t: complex) -> complex:
    a = space.kernel_coeffs(_SMALL_T_TERMS - 1)
    acc = 0j
    for coeff in a[::-1]:
        acc = acc * t + coeff
    return complex(acc)


def kernel_eval_closed(space: SpaceWeights, w: complex, z: complex) -> complex:
    """Closed-form kernel value for the kinds that have one (H2, A2, D2, S12)."""
    if not space.has_closed_form_kernel():
        raise UnsupportedSpaceError(f"no closed-form kernel for {space.label}")
    t = _kernel_argument(w, z)
    if space.kind == H2:
        return 1.0 / (1.0 - t)
    if space.kind == A2:
        return 1.0 / (1.0 - t) ** 2
    if abs(t) < _SMALL_T:
        return _short_sum(space, t)
    log_term = -np.log1p(-t)  # principal ln(1/(1-t))
    if space.kind == D2:
        return complex(log_term / t)
    return complex(2.0 / t**2 * (t + (t - 1.0) * log_term))


def kernel_eval_auto(
    space: SpaceWeights,
    w: complex,
    z: complex,
    rel_tol: float = 1e-12,
    force_series: bool = False,
) -> complex:
    """Closed form when available, else an adaptively truncated series sum.

    The series path appends terms until the tail bound (every kind here
    has a_n <= n+1, so the tail past m is dominated by
    r^m ((m+1)(1-r) + r)/(1-r)^2) drops below rel_tol times the
    accumulated value.
    """
    if space.has_closed_form_kernel() and not force_series:
        return kernel_eval_closed(space, w, z)
    t = _kernel_argument(w, z)
    r = abs(t)
    if r == 0.0:
        return complex(space.kernel_coeffs(0)[0])
    acc = 0j
    n0 = 0
    chunk = 64
    tn = 1.0 + 0j
    while n0 < 200_000:
        a = space.kernel_coeffs(n0 + chunk - 1)[n0:]
        powers = np.empty(chunk, dtype=np.complex128)
        powers[0] = tn
        if chunk > 1:
            np.cumprod(np.full(chunk - 1, t, dtype=np.complex128), out=powers[1:])
            powers[1:] *= tn
        acc += complex(a @ powers)
        tn *= t**chunk
        n0 += chunk
        tail = r**n0 * ((n0 + 1) * (1.0 - r) + r) / (1.0 - r) ** 2
        if tail <= rel_tol * max(abs(acc), 1.0):
            return complex(acc)
    raise DomainError("kernel series did not reach the requested tolerance")


def kernel_coefficient_series(space: SpaceWeights, order: int) -> PowerSeries:
    """The series sum a_n z^n.

    For S12 this is the pointwise-bound extremizer: its sup norm is
    attained at z = 1 and its S12 norm squared telescopes to 2.
    """
    return PowerSeries(space.kernel_coeffs(order).astype(np.complex128))


# ---------------------------------------------------------------------------
# boundary sup norm
# ---------------------------------------------------------------------------


def sup_norm(f: PowerSeries, samples: int = 4096) -> float:
    """max |f| over equispaced boundary points (maximum modulus principle).

    An approximation from below with O(d^2/samples) relative error for a
    degree-d polynomial; the sample count grows automatically when the
    stored order exceeds it.
    """
    m = samples
    while m < 2 * (f.order + 1):
        m *= 2
    values = np.fft.fft(f.coeffs, n=m)
    return float(np.abs(values).max())

"""Interpolation positivity machinery.

Three layers of tests around the kernels K_w(z) = sum a_n (conj(w) z)^n:

* log-convexity of the coefficient sequence (a_n^2 <= a_{n-1} a_{n+1}),
  a sufficient condition for the complete Pick property when a_0 = 1;
* sign pattern of the Taylor coefficients of 1/K, the exact
  characterization (all coefficients past the constant nonpositive);
* positive semi-definiteness of sampled Pick and corona matrices, a
  necessary condition for bounded interpolation.

The sampled matrix tests are necessary-condition checks only: a finite
grid cannot certify positivity over the whole bidisk.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import report as rp
from . import series as ps
from . import spaces as sp
from .errors import DomainError, ShapeError

DEFAULT_PSD_TOL = 1e-10
DEFAULT_SIGN_TOL = 1e-13


@dataclass(frozen=True)
class PickProblem:
    """Interpolation data: distinct nodes in the disk and target values."""

    space: sp.SpaceWeights
    nodes: tuple[complex, ...]
    targets: tuple[complex, ...]

    def __post_init__(self):
        nodes = tuple(complex(x) for x in self.nodes)
        targets = tuple(complex(x) for x in self.targets)
        if len(nodes) != len(targets):
            raise ValueError("nodes and targets must have equal length")
        if len(set(nodes)) != len(nodes):
            raise ValueError("interpolation nodes must be pairwise distinct")
        if any(abs(x) >= 1.0 for x in nodes):
            raise DomainError("interpolation nodes must lie in the open disk")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "targets", targets)

    @staticmethod
    def from_dict(d: dict) -> "PickProblem":
        return PickProblem(
            space=sp.parse_space(d["space"]),
            nodes=tuple(complex(p[0], p[1]) for p in d["nodes"]),
            targets=tuple(complex(p[0], p[1]) for p in d["targets"]),
        )


@dataclass(frozen=True)
class PsdVerdict:
    is_psd: bool
    min_eigenvalue: float
    matrix_scale: float


def kaluza_check(space: sp.SpaceWeights, n_max: int, check_id: str | None = None) -> rp.VerificationReport:
    """Log-convexity a_n^2 <= a_{n-1} a_{n+1} for 1 <= n <= n_max.

    Requires a_0 = 1 (hypothesis of the sufficiency criterion).  Records
    the first failing index, or -1 when the whole range passes.
    """
    a = space.kernel_coeffs(n_max + 1)
    if abs(a[0] - 1.0) > 1e-15:
        raise DomainError("log-convexity test requires a_0 = 1")
    lhs = a[1:-1] ** 2
    rhs = a[:-2] * a[2:]
    bad = np.nonzero(lhs > rhs)[0]
    first_failure = int(bad[0] + 1) if bad.size else -1
    margin = float(np.min(rhs - lhs))
    return rp.make_report(
        check_id or f"kaluza_{space.label}",
        computed=[("first_failure_index", first_failure), ("min_margin", margin)],
        reference=[("first_failure_index", -1, rp.PAPER)],
        tolerance=0.0,
        status=rp.PASS if first_failure < 0 else rp.FAIL,
    )


def reciprocal_kernel_coefficients(space: sp.SpaceWeights, n_max: int) -> np.ndarray:
    """Taylor coefficients c_n of 1/(sum a_n t^n) up to degree n_max."""
    kernel = sp.kernel_coefficient_series(space, n_max)
    return ps.reciprocal(kernel, n_max).coeffs.real.copy()


def reciprocal_sign_check(
    space: sp.SpaceWeights,
    n_max: int,
    sign_tol: float = DEFAULT_SIGN_TOL,
    check_id: str | None = None,
) -> rp.VerificationReport:
    """Complete-Pick characterization: c_n <= 0 for every n >= 1.

    The tolerance absorbs rounding of exact zeros.  Reports the first
    violating index and its value when the pattern breaks.
    """
    c = reciprocal_kernel_coefficients(space, n_max)
    bad = np.nonzero(c[1:] > sign_tol)[0]
    first_failure = int(bad[0] + 1) if bad.size else -1
    worst = float(c[1:].max()) if n_max >= 1 else 0.0
    computed = [("first_violation_index", first_failure), ("max_coefficient", worst)]
    if bad.size:
        computed.append(("violation_value", float(c[first_failure])))
    return rp.make_report(
        check_id or f"reciprocal_sign_{space.label}",
        computed=computed,
        reference=[("first_violation_index", -1, rp.PAPER)],
        tolerance=sign_tol,
        status=rp.PASS if first_failure < 0 else rp.FAIL,
    )


def pick_matrix(problem: PickProblem, mode: str = "auto") -> np.ndarray:
    """Hermitian matrix [(1 - conj(w_i) w_j) K_{node_i}(node_j)].

    ``mode`` picks the kernel evaluation: "closed", "series" (adaptive
    order), or "auto" (closed when the space has one).  The assembled
    matrix is symmetrized by averaging with its conjugate transpose.
    """
    n = len(problem.nodes)
    out = np.zeros((n, n), dtype=np.complex128)
    for i, (node_i, w_i) in enumerate(zip(problem.nodes, problem.targets)):
        for j, (node_j, w_j) in enumerate(zip(problem.nodes, problem.targets)):
            if mode == "closed":
                k = sp.kernel_eval_closed(problem.space, node_i, node_j)
            elif mode == "series":
                k = sp.kernel_eval_auto(problem.space, node_i, node_j, force_series=True)
            elif mode == "auto":
                k = sp.kernel_eval_auto(problem.space, node_i, node_j)
            else:
                raise ValueError(f"unknown kernel mode {mode!r}")
            out[i, j] = (1.0 - np.conj(w_i) * w_j) * k
    return 0.5 * (out + out.conj().T)


def psd_check(matrix: np.ndarray, psd_tol: float = DEFAULT_PSD_TOL) -> PsdVerdict:
    """Smallest eigenvalue of a Hermitian matrix against a scaled floor.

    The verdict is positive iff min eig >= -psd_tol * (largest diagonal
    entry); kernel evaluations carry ~1e-12 relative error which the
    eigensolve can amplify, hence the relative floor.
    """
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError("PSD check needs a square matrix")
    deviation = float(np.abs(m - m.conj().T).max()) if m.size else 0.0
    scale = float(np.abs(np.diag(m).real).max()) if m.size else 0.0
    if deviation > 1e-8 * max(scale, 1.0):
        raise ShapeError("matrix is not Hermitian within tolerance")
    herm = 0.5 * (m + m.conj().T)
    min_eig = float(np.linalg.eigvalsh(herm)[0]) if m.size else 0.0
    return PsdVerdict(
        is_psd=min_eig >= -psd_tol * max(scale, 0.0),
        min_eigenvalue=min_eig,
        matrix_scale=scale,
    )


def scalar_pick_counterexample() -> rp.VerificationReport:
    """The two halves of the scalar-Pick obstruction on the S2 scale.

    With node 0.5 and target modulus-squared 0.1 the necessary Pick
    condition holds,

        0.9 * (1 + sum_{n>=1} 0.25^n / n^2) ~ 1.1409 > 1,

    while any candidate multiplier of norm at most one must satisfy
    |target|^2 <= sum_{n>=1} 0.25^n / (n+1)^2 ~ 0.0706 < 0.1, so no
    interpolant exists.  Replacing the weights with the Hardy ones makes
    the attainability sum 1/3 and the obstruction dissolves.
    """
    n = np.arange(1, 201, dtype=np.float64)
    q = 0.25**n
    condition_value = 0.9 * (1.0 + np.sum(q / n**2))
    attainable_sq = float(np.sum(q / (n + 1) ** 2))
    hardy_sum = float(np.sum(q))
    ok = (
        condition_value > 1.0
        and attainable_sq < 0.1
        and abs(condition_value - 1.1409) < 5e-4
        and abs(attainable_sq - 0.0706) < 5e-4
    )
    return rp.make_report(
        "scalar_pick_gap",
        computed=[
            ("pick_condition_value", condition_value),
            ("attainable_target_sq", attainable_sq),
            ("hardy_attainable_sq", hardy_sum),
        ],
        reference=[
            ("pick_condition_value", 1.1409, rp.PAPER),
            ("attainable_target_sq", 0.0706, rp.PAPER),
            ("hardy_attainable_sq", 1.0 / 3.0, rp.DERIVED),
        ],
        tolerance=5e-4,
        status=rp.PASS if ok else rp.FAIL,
    )


def default_corona_grid(radii=(0.18, 0.36, 0.54, 0.72, 0.9), phases: int = 5) -> tuple[complex, ...]:
    """Polar sampling mesh inside the disk for corona-type checks."""
    pts = []
    for k, r in enumerate(radii):
        for j in range(phases):
            # stagger the rings so the grid is not rotation-degenerate
            theta = 2.0 * np.pi * (j + 0.5 * (k % 2)) / phases
            pts.append(complex(r * np.cos(theta), r * np.sin(theta)))
    return tuple(pts)


def corona_kernel_check(
    space: sp.SpaceWeights,
    symbols,
    delta: float,
    grid=None,
    psd_tol: float = DEFAULT_PSD_TOL,
) -> PsdVerdict:
    """Sampled positivity of [sum_k conj(f_k(w)) f_k(z) - delta^2] K_w(z).

    A necessary sampled test on the given grid, not a proof of positivity
    over the whole bidisk (which no finite computation certifies).
    """
    grid = default_corona_grid() if grid is None else tuple(complex(g) for g in grid)
    if any(abs(g) >= 1.0 for g in grid):
        raise DomainError("corona grid points must lie in the open disk")
    values = np.array([[ps.evaluate(f, g) for g in grid] for f in symbols])
    m = len(grid)
    out = np.zeros((m, m), dtype=np.complex128)
    for i, w in enumerate(grid):
        for j, z in enumerate(grid):
            k = sp.kernel_eval_auto(space, w, z)
            out[i, j] = (np.vdot(values[:, i], values[:, j]) - delta**2) * k
    return psd_check(0.5 * (out + out.conj().T), psd_tol=psd_tol)

"""Potential / zero-sum tests and stability classification.

Cycle criteria and component norms are two independent routes to the same
answer; both are reported so callers can see how close a game is to the
boundary. Thresholds are ``tol * (1 + ||A||_F)`` unless stated otherwise.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .core import (
    DEFAULT_TOL,
    BimatrixGame,
    DomainError,
    as_square,
    frobenius,
    projection_matrix,
    tangent_basis,
)
from .decompose import decompose_bimatrix, decompose_symmetric, gamma


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of a cycle criterion together with the component-norm cross-check."""

    holds: bool
    residual: float
    component_norm: float
    component_holds: bool
    threshold: float
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds

    @property
    def agree(self) -> bool:
        return self.holds == self.component_holds


def _first_violation(r: np.ndarray, thr: float):
    hits = np.argwhere(np.abs(r) > thr)
    if len(hits) == 0:
        return None
    return tuple(int(k) + 1 for k in hits[0])


def potential_cycle_residuals(g) -> np.ndarray:
    """Cycle sums whose vanishing characterises potential games.

    Symmetric game: ``R[k, l, m] = a(l,m) - a(k,m) + a(k,l) - a(m,l) + a(m,k) - a(l,k)``.
    Bimatrix game: four-cycle sums ``R[i, i', j, j']`` around each 2x2 sub-game.
    """
    if isinstance(g, BimatrixGame):
        a, b = g.a, g.b
        return (
            a[None, :, :, None] - a[:, None, :, None]
            + b[None, :, None, :] - b[None, :, :, None]
            + a[:, None, None, :] - a[None, :, None, :]
            + b[:, None, :, None] - b[:, None, None, :]
        )
    a = as_square(g)
    d = a - a.T
    return d[:, :, None] + d[None, :, :] + d.T[:, None, :]


def zero_sum_cycle_residuals(g) -> np.ndarray:
    """``R[i, j] = a(j,i) - a(i,i) + a(i,j) - a(j,j)``; bimatrix analogue on 2x2 sub-games."""
    if isinstance(g, BimatrixGame):
        a, b = g.a, g.b
        return (
            a[None, :, :, None] - a[:, None, :, None]
            - b[None, :, None, :] + b[None, :, :, None]
            + a[:, None, None, :] - a[None, :, None, :]
            - b[:, None, :, None] + b[:, None, None, :]
        )
    a = as_square(g)
    dg = np.diag(a)
    return a + a.T - dg[:, None] - dg[None, :]


def _threshold(g, tol):
    return tol * (1.0 + frobenius(g))


def is_potential(g, tol: float = DEFAULT_TOL.classify) -> CriterionResult:
    thr = _threshold(g, tol)
    r = potential_cycle_residuals(g)
    if isinstance(g, BimatrixGame):
        comp = decompose_bimatrix(g).anti_potential.norm()
    else:
        comp = float(np.linalg.norm(decompose_symmetric(g).anti_potential))
    res = float(np.max(np.abs(r)))
    return CriterionResult(res <= thr, res, comp, comp <= thr, thr, _first_violation(r, thr))


def is_zero_sum(g, tol: float = DEFAULT_TOL.classify) -> CriterionResult:
    thr = _threshold(g, tol)
    r = zero_sum_cycle_residuals(g)
    if isinstance(g, BimatrixGame):
        comp = decompose_bimatrix(g).anti_zero_sum.norm()
    else:
        comp = float(np.linalg.norm(decompose_symmetric(g).anti_zero_sum))
    res = float(np.max(np.abs(r)))
    return CriterionResult(res <= thr, res, comp, comp <= thr, thr, _first_violation(r, thr))


@dataclass(frozen=True)
class StabilityReport:
    is_potential: bool
    is_zero_sum: bool
    is_null_stable: bool
    is_stable: bool
    is_strict_stable: bool
    tangent_eigenvalues: tuple = field(default=())
    max_criterion_residual: float = 0.0
    witness: Optional[tuple] = None

    def as_dict(self) -> dict:
        d = asdict(self)
        d["tangent_eigenvalues"] = list(self.tangent_eigenvalues)
        d["witness"] = None if self.witness is None else list(self.witness)
        return d


def tangent_spectrum(s: np.ndarray) -> np.ndarray:
    """Eigenvalues of a symmetric matrix restricted to the simplex tangent space."""
    v = tangent_basis(s.shape[0])
    return np.linalg.eigvalsh(v.T @ s @ v)


def stability_report(g, tol: float = DEFAULT_TOL.classify) -> StabilityReport:
    """Classify a symmetric game through the spectrum of its anti-zero-sum part.

    A game is stable iff <z, A z> <= 0 on the tangent space, and only the
    anti-zero-sum part S contributes to that quadratic form.
    """
    a = as_square(g)
    s = decompose_symmetric(a).anti_zero_sum
    lam = tangent_spectrum(s)
    thr = _threshold(a, tol)
    strict_margin = tol * float(np.linalg.norm(s))
    null = float(np.linalg.norm(lam)) <= thr
    zs = is_zero_sum(a, tol)
    return StabilityReport(
        is_potential=is_potential(a, tol).holds,
        is_zero_sum=zs.holds,
        is_null_stable=null,
        is_stable=bool(lam.max() <= thr),
        is_strict_stable=bool(not null and lam.max() < -strict_margin),
        tangent_eigenvalues=tuple(float(x) for x in lam),
        max_criterion_residual=zs.residual,
        witness=zs.witness,
    )


def bimatrix_stability(g: BimatrixGame, tol: float = DEFAULT_TOL.classify) -> StabilityReport:
    """Bimatrix games are stable exactly when they are zero-sum, and never strictly.

    The reported eigenvalues belong to the symmetric part of the projected
    block matrix on the product tangent space; they come in +/- pairs.
    """
    zs = is_zero_sum(g, tol)
    blk = gamma(g).block()
    sym = 0.5 * (blk + blk.T)
    w = np.zeros((g.l_r + g.l_c, g.l_r + g.l_c - 2))
    w[: g.l_r, : g.l_r - 1] = tangent_basis(g.l_r)
    w[g.l_r :, g.l_r - 1 :] = tangent_basis(g.l_c)
    lam = np.linalg.eigvalsh(w.T @ sym @ w)
    return StabilityReport(
        is_potential=is_potential(g, tol).holds,
        is_zero_sum=zs.holds,
        is_null_stable=zs.holds,
        is_stable=zs.holds,
        is_strict_stable=False,
        tangent_eigenvalues=tuple(float(x) for x in lam),
        max_criterion_residual=zs.residual,
        witness=zs.witness,
    )


def k_parametrized_3(a: float, b: float, c: float) -> np.ndarray:
    """a K(1,2) + b K(1,3) + c K(2,3)."""
    return np.array([[-a - b, a, b], [a, -a - c, c], [b, c, -b - c]], dtype=float)


def strict_stable_3(a: float, b: float, c: float) -> bool:
    """Closed-form strict stability of the three-strategy game a K12 + b K13 + c K23."""
    return bool(4 * a + b + c > 0 and a * b + b * c + c * a > 0)


def offdiag_3(beta12: float, beta13: float, beta23: float) -> np.ndarray:
    return np.array(
        [[0.0, beta12, beta13], [beta12, 0.0, beta23], [beta13, beta23, 0.0]]
    )


def strict_stable_offdiag_3(beta12: float, beta13: float, beta23: float) -> bool:
    total = beta12 + beta13 + beta23
    return bool(beta12 > 0 and total**2 > 2 * (beta12**2 + beta13**2 + beta23**2))


@dataclass(frozen=True)
class PreferenceDigraph:
    nodes: tuple
    edges: tuple

    def to_dot(self, labels=None) -> str:
        name = (lambda k: f'"{labels[k - 1]}"') if labels else str
        lines = ["digraph {"]
        lines += [f"  {name(k)};" for k in self.nodes]
        lines += [f"  {name(i)} -> {name(j)};" for i, j in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def preference_digraph(g, tol: float = DEFAULT_TOL.classify) -> PreferenceDigraph:
    """Edge i -> j whenever a(i, j) = +1, for antisymmetric sign matrices."""
    a = as_square(g)
    r = np.rint(a)
    if np.max(np.abs(a - r)) > tol or np.any(np.abs(r) > 1):
        raise DomainError("digraph needs a matrix with entries in {-1, 0, 1}")
    if np.max(np.abs(a + a.T)) > tol:
        raise DomainError("digraph needs an antisymmetric matrix")
    edges = tuple((int(i) + 1, int(j) + 1) for i, j in np.argwhere(r == 1))
    return PreferenceDigraph(tuple(range(1, a.shape[0] + 1)), edges)


def quadratic_form_on_tangent(g, x) -> float:
    """<x, P A P x>, used as the direct definition of (null-)stability."""
    a = as_square(g)
    p = projection_matrix(a.shape[0])
    x = np.asarray(x, dtype=float)
    return float(x @ p @ a @ p @ x)

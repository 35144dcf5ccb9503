"""Zeeman games: a pure ESS coexisting with a stable interior rest point.

Both constructions fix the zero eigenvalue on the direction (1, ..., 1), so
the resulting matrices have zero row and column sums and the barycenter is a
rest point whose linearisation is simply A / l.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import DEFAULT_TOL, MatrixGame, PreconditionError, as_square, projection_matrix

RPS = np.array([[0.0, -1.0, 1.0], [1.0, 0.0, -1.0], [-1.0, 1.0, 0.0]])

_E3 = np.array([[1.0, 1.0, 1.0], [1.0, 0.0, -2.0], [1.0, -1.0, 1.0]])
_E4 = np.array(
    [[1.0, 1.0, 1.0, 1.0], [1.0, 0.0, 0.0, -3.0], [1.0, 0.0, -2.0, 1.0], [1.0, -1.0, 1.0, 1.0]]
)
_CYCLE4 = np.array(
    [[0.0, 1.0, 0.0, -1.0], [-1.0, 0.0, 1.0, 0.0], [0.0, -1.0, 0.0, 1.0], [1.0, 0.0, -1.0, 0.0]]
)

INTERIOR_TYPES = ("sink", "center", "source", "indeterminate")


@dataclass(frozen=True)
class Zeeman3Params:
    alpha: float
    beta: float
    eta: float
    theta: float = 0.0

    def scale(self) -> float:
        return max(1.0, abs(self.alpha), abs(self.beta), abs(self.eta))


@dataclass(frozen=True)
class Zeeman4Params:
    alpha: float
    beta: float
    gamma: float
    eta: float

    def scale(self) -> float:
        return max(1.0, abs(self.alpha), abs(self.beta), abs(self.gamma), abs(self.eta))


@dataclass(frozen=True)
class ZeemanReport:
    ess_strategy: Optional[int]
    interior_type: str
    jacobian_eigenvalues: tuple
    strict_nash: tuple = ()

    def as_dict(self) -> dict:
        return {
            "ess_strategy": self.ess_strategy,
            "interior_type": self.interior_type,
            "jacobian_eigenvalues": [[float(z.real), float(z.imag)] for z in self.jacobian_eigenvalues],
            "strict_nash": list(self.strict_nash),
        }


def rotation_matrix(theta: float) -> np.ndarray:
    """Rotation by theta about the axis (1, 1, 1); fixes 1 and is orthogonal on TΔ."""
    p = projection_matrix(3)
    return np.eye(3) - p + (np.cos(theta) * np.eye(3) + np.sin(theta) * RPS / np.sqrt(3)) @ p


def zeeman3(p: Zeeman3Params) -> MatrixGame:
    r = rotation_matrix(p.theta)
    sym = _E3 @ np.diag([0.0, 2 * p.alpha, 2 * p.beta]) @ np.linalg.inv(_E3)
    a = r @ sym @ np.linalg.inv(r) - p.eta * RPS
    return MatrixGame(a)


def zeeman3_closed_form(alpha: float, beta: float, eta: float) -> np.ndarray:
    """The theta = 0 matrix written out entrywise."""
    return np.array(
        [
            [3 * alpha + beta, -2 * beta + 3 * eta, -3 * alpha + beta - 3 * eta],
            [-2 * beta - 3 * eta, 4 * beta, -2 * beta + 3 * eta],
            [-3 * alpha + beta + 3 * eta, -2 * beta - 3 * eta, 3 * alpha + beta],
        ]
    ) / 3.0


def zeeman4(p: Zeeman4Params) -> MatrixGame:
    sym = _E4 @ np.diag([0.0, p.alpha, p.beta, p.gamma]) @ np.linalg.inv(_E4)
    return MatrixGame(sym + p.eta * _CYCLE4)


def zeeman4_charpoly(p: Zeeman4Params) -> np.ndarray:
    """Coefficients of phi(t), highest power first, as returned by ``np.poly``."""
    al, be, ga, et = p.alpha, p.beta, p.gamma, p.eta
    return np.array(
        [
            1.0,
            -(al + be + ga),
            al * be + be * ga + ga * al + 4 * et**2,
            -(al * be * ga) - (6 * al + 2 * be + 4 * ga) * et**2 / 3.0,
            0.0,
        ]
    )


def strict_nash_strategies(a, margin: float = 0.0) -> tuple:
    """1-based pure strategies s with a(s, s) > a(k, s) + margin for every k != s."""
    a = as_square(a)
    out = []
    for s in range(a.shape[0]):
        others = np.delete(a[:, s], s)
        if np.all(a[s, s] - others > margin):
            out.append(s + 1)
    return tuple(out)


def jacobian_at_barycenter(g, tol: float = DEFAULT_TOL.classify) -> np.ndarray:
    """Linearisation of the replicator field at the barycenter, valid when A1 = 0 and 1^T A = 0."""
    a = as_square(g)
    row, col = float(np.linalg.norm(a.sum(axis=1))), float(np.linalg.norm(a.sum(axis=0)))
    thr = tol * (1.0 + np.linalg.norm(a))
    if row > thr or col > thr:
        raise PreconditionError(
            f"need zero row and column sums: ||A1|| = {row:.3e}, ||1^T A|| = {col:.3e}",
            residual=(row, col),
        )
    return a / a.shape[0]


def _spectrum(a) -> tuple:
    lam = np.linalg.eigvals(a / a.shape[0])
    return tuple(complex(z) for z in sorted(lam, key=lambda z: (z.real, z.imag)))


def zeeman3_classify(p: Zeeman3Params, tol: float = DEFAULT_TOL.classify) -> ZeemanReport:
    a = zeeman3(p).payoff
    m = tol * p.scale()
    nash = strict_nash_strategies(a, m)
    disc = (p.alpha - p.beta) ** 2 - 3 * p.eta**2
    s = p.alpha + p.beta
    kind = "indeterminate"
    if disc < -m * p.scale():
        kind = "sink" if s < -m else "source" if s > m else "center"
    return ZeemanReport(1 if 1 in nash else None, kind, _spectrum(a), nash)


def _hurwitz3(a1, a2, a3, margins) -> bool:
    """All roots of t^3 + a1 t^2 + a2 t + a3 in the open left half plane."""
    m1, m2, m3 = margins
    return a1 > m1 and a2 > m2 and a3 > m3 and a1 * a2 - a3 > m3


def zeeman4_classify(p: Zeeman4Params, tol: float = DEFAULT_TOL.classify) -> ZeemanReport:
    """Sink via the Routh-Hurwitz conditions on phi(t) / t, source via phi(-t)."""
    a = zeeman4(p).payoff
    k = p.scale()
    margins = (tol * k, tol * k**2, tol * k**3)
    _, c3, c2, c1, _ = zeeman4_charpoly(p)
    if _hurwitz3(c3, c2, c1, margins):
        kind = "sink"
    elif _hurwitz3(-c3, c2, -c1, margins):
        kind = "source"
    else:
        kind = "indeterminate"
    nash = strict_nash_strategies(a, tol * k)
    return ZeemanReport(2 if 2 in nash else None, kind, _spectrum(a), nash)

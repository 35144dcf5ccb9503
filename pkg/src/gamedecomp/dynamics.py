"""Replicator dynamics on the simplex.

One population:  dx_i/dt = x_i ((A x)_i - x.A x)
Two populations: dx_i/dt = x_i ((A y)_i - x.A y),  dy_j/dt = y_j ((B^T x)_j - y.B^T x)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    DEFAULT_TOL,
    BimatrixGame,
    DimensionError,
    DomainError,
    IntegrationError,
    as_square,
)
from .decompose import decompose_symmetric

# admissible drift of a user supplied point off the simplex
SIMPLEX_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class SimplexPoint:
    x: np.ndarray

    def __post_init__(self):
        x = np.array(self.x, dtype=float)
        if x.ndim != 1 or x.size < 1:
            raise DimensionError("a simplex point is a non-empty vector")
        if np.any(~np.isfinite(x)) or x.min() < -SIMPLEX_TOL or abs(x.sum() - 1.0) > SIMPLEX_TOL:
            raise DomainError(f"point {x.tolist()} is not on the simplex")
        x.setflags(write=False)
        object.__setattr__(self, "x", x)

    @property
    def interior(self) -> bool:
        return bool(self.x.min() > 0)

    @classmethod
    def barycenter(cls, l: int) -> "SimplexPoint":
        return cls(np.full(l, 1.0 / l))


def _point(x, l=None) -> np.ndarray:
    if not isinstance(x, SimplexPoint):
        x = SimplexPoint(x)
    if l is not None and x.x.size != l:
        raise DimensionError(f"point has {x.x.size} coordinates, game has {l} strategies")
    return x.x


def replicator_field(g, x) -> np.ndarray:
    a = as_square(g)
    x = _point(x, a.shape[0])
    ax = a @ x
    return x * (ax - x @ ax)


def replicator_field_bimatrix(g: BimatrixGame, x, y) -> tuple[np.ndarray, np.ndarray]:
    x = _point(x, g.l_r)
    y = _point(y, g.l_c)
    ay = g.a @ y
    bx = g.b.T @ x
    return x * (ay - x @ ay), y * (bx - y @ bx)


@dataclass(frozen=True, eq=False)
class FieldSplit:
    potential_part: np.ndarray
    monotonic_part: np.ndarray
    conservative_part: np.ndarray
    eta: np.ndarray

    def total(self) -> np.ndarray:
        return self.potential_part + self.monotonic_part + self.conservative_part


def constant_game_payoffs(g) -> np.ndarray:
    """Row payoffs eta of the constant-game part of A, normalised to eta_1 = 0.

    The kernel part of A equals eta 1^T plus a passive game.
    """
    kernel = decompose_symmetric(as_square(g)).kernel
    eta = kernel.mean(axis=1)
    return eta - eta[0]


def strip_passive(g) -> np.ndarray:
    """A with its passive part removed: S + eta 1^T + N."""
    d = decompose_symmetric(as_square(g))
    eta = constant_game_payoffs(g)
    return d.anti_zero_sum + np.outer(eta, np.ones(eta.size)) + d.anti_potential


def field_split(g, x) -> FieldSplit:
    """Gradient-like, monotone and circulating parts of the replicator field.

    Passive games generate the zero field on the simplex, so the three parts
    also add up to the field of the original game.
    """
    a = as_square(g)
    x = _point(x, a.shape[0])
    d = decompose_symmetric(a)
    s, n = d.anti_zero_sum, d.anti_potential
    eta = constant_game_payoffs(a)
    sx = s @ x
    return FieldSplit(
        potential_part=x * (sx - x @ sx),
        monotonic_part=x * (eta - eta[1:] @ x[1:]),
        conservative_part=x * (n @ x),
        eta=eta,
    )


def log_invariant(x) -> float:
    """H(x) = sum_i log x_i."""
    x = np.asarray(getattr(x, "x", x), dtype=float)
    with np.errstate(divide="ignore"):
        return float(np.sum(np.log(x)))


def lyapunov_derivative(g, x) -> float:
    """Derivative of H = sum log x_i along the flow: sum_i (Ax)_i - l x.Ax."""
    a = as_square(g)
    x = _point(x, a.shape[0])
    if x.min() <= 0:
        raise DomainError("H is only defined at interior points")
    ax = a @ x
    return float(ax.sum() - a.shape[0] * (x @ ax))


def divergence(g, x) -> float:
    """Divergence of the field in the chart (x_2, ..., x_l) of the simplex."""
    a = as_square(g)
    x = _point(x, a.shape[0])
    ax = a @ x
    return float(ax.sum() - a.shape[0] * (x @ ax) + x @ np.diag(a) - x @ (a.T @ x))


def divergence_bimatrix(g: BimatrixGame, x, y) -> float:
    x = _point(x, g.l_r)
    y = _point(y, g.l_c)
    ay = g.a @ y
    bx = g.b.T @ x
    return float(ay.sum() - g.l_r * (x @ ay) + bx.sum() - g.l_c * (y @ bx))


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Integrated path; bimatrix states are stored as concatenated (x, y)."""

    times: np.ndarray
    states: np.ndarray
    invariant_values: Optional[np.ndarray] = None
    split: Optional[int] = None

    @property
    def x(self) -> np.ndarray:
        return self.states if self.split is None else self.states[:, : self.split]

    @property
    def y(self) -> Optional[np.ndarray]:
        return None if self.split is None else self.states[:, self.split :]

    def header(self) -> list[str]:
        if self.split is None:
            cols = [f"x{k + 1}" for k in range(self.states.shape[1])]
        else:
            cols = [f"x{k + 1}" for k in range(self.split)]
            cols += [f"y{k + 1}" for k in range(self.states.shape[1] - self.split)]
        cols = ["t"] + cols
        if self.invariant_values is not None:
            cols.append("H")
        return cols

    def write_csv(self, fh) -> None:
        import csv

        w = csv.writer(fh, lineterminator="\n")
        w.writerow(self.header())
        for k, t in enumerate(self.times):
            row = [repr(float(t))] + [repr(float(v)) for v in self.states[k]]
            if self.invariant_values is not None:
                row.append(repr(float(self.invariant_values[k])))
            w.writerow(row)


def _rk4_step(f, z, h):
    k1 = f(z)
    k2 = f(z + 0.5 * h * k1)
    k3 = f(z + 0.5 * h * k2)
    k4 = f(z + h * k3)
    return z + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)


def integrate(g, x0, t_end: float, h: float = 0.01, y0=None, track_H: bool = False,
              tol=DEFAULT_TOL) -> Trajectory:
    """Fixed-step classical RK4 with renormalisation after every step.

    Negative coordinates down to ``-tol.abs`` are clamped to zero; anything
    more negative raises :class:`IntegrationError` carrying the last valid state.
    """
    if not (h > 0 and t_end > 0):
        raise DomainError("step and end time must be positive")
    if isinstance(g, BimatrixGame):
        if y0 is None:
            raise DomainError("bimatrix integration needs y0")
        blocks = [(0, g.l_r), (g.l_r, g.l_r + g.l_c)]
        z = np.concatenate([_point(x0, g.l_r), _point(y0, g.l_c)])

        def f(z):
            x, y = z[: g.l_r], z[g.l_r :]
            ay, bx = g.a @ y, g.b.T @ x
            return np.concatenate([x * (ay - x @ ay), y * (bx - y @ bx)])

        split = g.l_r
    else:
        a = as_square(g)
        z = _point(x0, a.shape[0]).copy()
        blocks = [(0, a.shape[0])]

        def f(z):
            az = a @ z
            return z * (az - z @ az)

        split = None

    n_steps = max(1, math.ceil(t_end / h - 1e-9))
    times = np.empty(n_steps + 1)
    states = np.empty((n_steps + 1, z.size))
    times[0], states[0] = 0.0, z
    t = 0.0
    for k in range(1, n_steps + 1):
        step = min(h, t_end - t) if k == n_steps else h
        new = _rk4_step(f, z, step)
        if not np.all(np.isfinite(new)) or new.min() < -tol.abs:
            raise IntegrationError(
                f"trajectory left the simplex at t={t + step:.6g}", last_state=z.copy(), time=t
            )
        new = np.maximum(new, 0.0)
        for lo, hi in blocks:
            new[lo:hi] /= new[lo:hi].sum()
        z, t = new, t + step
        times[k], states[k] = t, z
    inv = None
    if track_H:
        with np.errstate(divide="ignore"):
            inv = np.log(states).sum(axis=1)
    return Trajectory(times, states, inv, split)

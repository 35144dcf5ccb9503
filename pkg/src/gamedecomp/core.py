"""Game value types, inner products and simplex projections."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class GameError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(GameError, ValueError):
    """Shapes of inputs are inconsistent."""


class DomainError(GameError, ValueError):
    """An argument is outside the domain of the operation."""


class PreconditionError(GameError):
    """A numeric precondition failed; ``residual`` holds the offending size."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotSymmetricError(PreconditionError):
    pass


class IntegrationError(GameError):
    """Raised when a trajectory leaves the simplex."""

    def __init__(self, message, last_state=None, time=None):
        super().__init__(message)
        self.last_state = last_state
        self.time = time


class CapacityError(GameError):
    pass


@dataclass(frozen=True)
class Tolerances:
    abs: float = 1e-12
    rel: float = 1e-9
    classify: float = 1e-9

    def __post_init__(self):
        for name in ("abs", "rel", "classify"):
            if not getattr(self, name) > 0:
                raise DomainError(f"tolerance {name!r} must be strictly positive")


DEFAULT_TOL = Tolerances()


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class MatrixGame:
    """Symmetric two-player game given by the row player's l x l payoff matrix."""

    payoff: np.ndarray

    def __post_init__(self):
        payoff = _frozen(self.payoff)
        if payoff.ndim != 2 or payoff.shape[0] != payoff.shape[1]:
            raise DimensionError(f"payoff must be a square matrix, got shape {payoff.shape}")
        if payoff.shape[0] < 2:
            raise DimensionError("a game needs at least 2 strategies")
        if not np.all(np.isfinite(payoff)):
            raise DomainError("payoff entries must be finite")
        object.__setattr__(self, "payoff", payoff)

    @property
    def l(self) -> int:
        return self.payoff.shape[0]

    def __repr__(self):
        return f"MatrixGame(l={self.l})"


@dataclass(frozen=True, eq=False)
class BimatrixGame:
    """Two-player game (A, B); ``a`` pays the row player, ``b`` the column player.

    Both matrices are indexed ``[row strategy, column strategy]``.
    """

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a, b = _frozen(self.a), _frozen(self.b)
        if a.ndim != 2 or a.shape != b.shape:
            raise DimensionError(f"payoff matrices must share a 2-d shape, got {a.shape} and {b.shape}")
        if min(a.shape) < 2:
            raise DimensionError("each player needs at least 2 strategies")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise DomainError("payoff entries must be finite")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    @property
    def l_r(self) -> int:
        return self.a.shape[0]

    @property
    def l_c(self) -> int:
        return self.a.shape[1]

    def block(self) -> np.ndarray:
        """Embed as the (l_r + l_c) square matrix [[0, A], [B^T, 0]]."""
        lr, lc = self.shape
        out = np.zeros((lr + lc, lr + lc))
        out[:lr, lr:] = self.a
        out[lr:, :lr] = self.b.T
        return out

    @classmethod
    def from_block(cls, m, l_r: int) -> "BimatrixGame":
        m = np.asarray(m, dtype=float)
        return cls(m[:l_r, l_r:], m[l_r:, :l_r].T)

    @classmethod
    def symmetric(cls, a) -> "BimatrixGame":
        """The bimatrix form (A, A^T) of a symmetric game."""
        a = np.asarray(a, dtype=float)
        return cls(a, a.T)

    def norm(self) -> float:
        return float(np.sqrt(bimatrix_inner_product(self, self)))

    def __add__(self, other):
        if not isinstance(other, BimatrixGame):
            return NotImplemented
        return BimatrixGame(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        if not isinstance(other, BimatrixGame):
            return NotImplemented
        return BimatrixGame(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return BimatrixGame(-self.a, -self.b)

    def __mul__(self, c):
        return BimatrixGame(c * self.a, c * self.b)

    __rmul__ = __mul__

    def __repr__(self):
        return f"BimatrixGame(shape={self.shape})"


def as_matrix(g) -> np.ndarray:
    """Payoff matrix of a MatrixGame, or the array itself for array-likes."""
    if isinstance(g, MatrixGame):
        return g.payoff
    if isinstance(g, BimatrixGame):
        raise DimensionError("expected a symmetric game, got a bimatrix game")
    return np.asarray(g, dtype=float)


def as_square(g) -> np.ndarray:
    a = as_matrix(g)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


def inner_product(a, b) -> float:
    """Trace inner product tr(A^T B), i.e. the sum of entrywise products."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.sum(a * b))


def bimatrix_inner_product(g1: BimatrixGame, g2: BimatrixGame) -> float:
    if g1.shape != g2.shape:
        raise DimensionError(f"shape mismatch: {g1.shape} vs {g2.shape}")
    return inner_product(g1.a, g2.a) + inner_product(g1.b, g2.b)


def frobenius(a) -> float:
    if isinstance(a, BimatrixGame):
        return a.norm()
    return float(np.linalg.norm(as_matrix(a)))


def projection_matrix(l: int) -> np.ndarray:
    """Orthogonal projector I - 11^T / l onto the tangent space of the simplex."""
    if l < 1:
        raise DomainError(f"l must be >= 1, got {l}")
    return np.eye(l) - np.full((l, l), 1.0 / l)


def tangent_basis(l: int) -> np.ndarray:
    """Orthonormal basis of {x : sum(x) = 0} as the columns of an l x (l-1) matrix."""
    # Helmert contrasts
    v = np.zeros((l, l - 1))
    for k in range(1, l):
        v[:k, k - 1] = 1.0
        v[k, k - 1] = -k
        v[:, k - 1] /= np.sqrt(k * (k + 1))
    return v


def games_close(x, y, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Frobenius distance test ``||x - y|| <= abs + rel * ||x||``."""
    if isinstance(x, BimatrixGame):
        return (x - y).norm() <= tol.abs + tol.rel * x.norm()
    x, y = as_matrix(x), as_matrix(y)
    return np.linalg.norm(x - y) <= tol.abs + tol.rel * np.linalg.norm(x)

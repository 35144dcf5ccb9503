"""Orthogonal three-part decomposition of two-player games.

Every game splits uniquely as

    A = anti_zero_sum + kernel + anti_potential

where ``anti_zero_sum`` is symmetric with zero row and column sums,
``anti_potential`` is antisymmetric with zero row and column sums and
``kernel`` is annihilated by ``A -> P A P``. The parts are orthogonal in the
trace inner product. Potential games are exactly those with no
anti-potential part, zero-sum games those with no anti-zero-sum part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .core import (
    DEFAULT_TOL,
    BimatrixGame,
    DimensionError,
    MatrixGame,
    NotSymmetricError,
    PreconditionError,
    Tolerances,
    as_matrix,
    as_square,
    bimatrix_inner_product,
    frobenius,
    inner_product,
)

Component = Union[np.ndarray, BimatrixGame]


def _center(a: np.ndarray) -> np.ndarray:
    # P_r A P_c without forming the projectors
    return a - a.mean(axis=0, keepdims=True) - a.mean(axis=1, keepdims=True) + a.mean()


def gamma(a):
    """The projection ``A -> P_r A P_c``; bimatrix games are mapped slotwise."""
    if isinstance(a, BimatrixGame):
        return BimatrixGame(_center(a.a), _center(a.b))
    a = as_matrix(a)
    if a.ndim != 2:
        raise DimensionError(f"expected a matrix, got shape {a.shape}")
    return _center(a)


@dataclass(frozen=True, eq=False)
class Decomposition:
    anti_zero_sum: Component
    kernel: Component
    anti_potential: Component
    residual: float

    @property
    def components(self) -> tuple:
        return (self.anti_zero_sum, self.kernel, self.anti_potential)

    @property
    def potential_part(self) -> Component:
        return self.anti_zero_sum + self.kernel

    @property
    def zero_sum_part(self) -> Component:
        return self.anti_potential + self.kernel

    @property
    def range_part(self) -> Component:
        return self.anti_zero_sum + self.anti_potential

    def total(self) -> Component:
        return self.anti_zero_sum + self.kernel + self.anti_potential

    def norms(self) -> dict:
        return {
            "anti_zero_sum": frobenius(self.anti_zero_sum),
            "kernel": frobenius(self.kernel),
            "anti_potential": frobenius(self.anti_potential),
        }

    def orthogonality(self) -> dict:
        """Pairwise inner products of the three parts (zero up to rounding)."""
        s, c, n = self.components
        ip = bimatrix_inner_product if isinstance(s, BimatrixGame) else inner_product
        return {
            "anti_zero_sum.kernel": ip(s, c),
            "anti_zero_sum.anti_potential": ip(s, n),
            "kernel.anti_potential": ip(c, n),
        }


def decompose_symmetric(g) -> Decomposition:
    a = as_square(g)
    pap = _center(a)
    s = 0.5 * (pap + pap.T)
    n = 0.5 * (pap - pap.T)
    c = a - pap
    residual = float(np.linalg.norm(a - (s + c + n)))
    return Decomposition(s, c, n, residual)


def decompose_bimatrix(g: BimatrixGame) -> Decomposition:
    """Split (A, B) into (V, V) + kernel + (N, -N)."""
    if not isinstance(g, BimatrixGame):
        raise DimensionError("decompose_bimatrix expects a BimatrixGame")
    abar, bbar = _center(g.a), _center(g.b)
    v = 0.5 * (abar + bbar)
    n = 0.5 * (abar - bbar)
    s = BimatrixGame(v, v)
    c = BimatrixGame(g.a - abar, g.b - bbar)
    z = BimatrixGame(n, -n)
    residual = (g - (s + c + z)).norm()
    return Decomposition(s, c, z, residual)


def decompose(g) -> Decomposition:
    if isinstance(g, BimatrixGame):
        return decompose_bimatrix(g)
    return decompose_symmetric(g)


@dataclass(frozen=True, eq=False)
class SandholmSplit:
    range_part: np.ndarray
    left_kernel: np.ndarray
    right_kernel: np.ndarray
    both_kernel: np.ndarray

    def total(self) -> np.ndarray:
        return self.range_part + self.left_kernel + self.right_kernel + self.both_kernel


def sandholm_split(a) -> SandholmSplit:
    """PAP + (I-P)AP + PA(I-P) + (I-P)A(I-P); the last three lie in the kernel."""
    a = as_matrix(a)
    l_r, l_c = a.shape
    p_r = np.eye(l_r) - 1.0 / l_r
    p_c = np.eye(l_c) - 1.0 / l_c
    q_r, q_c = np.eye(l_r) - p_r, np.eye(l_c) - p_c
    return SandholmSplit(p_r @ a @ p_c, q_r @ a @ p_c, p_r @ a @ q_c, q_r @ a @ q_c)


@dataclass(frozen=True, eq=False)
class KernelSplit:
    """A kernel game written as column-constant + row-constant + offset.

    The split is one representation among many: the all-ones matrix is both
    column- and row-constant, which is what ``offset`` accounts for.
    """

    passive_part: np.ndarray
    constant_part: np.ndarray
    offset: np.ndarray

    def total(self) -> np.ndarray:
        return self.passive_part + self.constant_part + self.offset


def kernel_split(c, tol: float = DEFAULT_TOL.classify) -> KernelSplit:
    c = as_matrix(c)
    res = float(np.linalg.norm(_center(c)))
    if res > tol * (1.0 + np.linalg.norm(c)):
        raise PreconditionError(f"matrix is not in the kernel: ||P C P|| = {res:.3e}", residual=res)
    passive = np.broadcast_to(c.mean(axis=0, keepdims=True), c.shape).copy()
    constant = np.broadcast_to(c.mean(axis=1, keepdims=True), c.shape).copy()
    offset = np.full(c.shape, -c.mean())
    return KernelSplit(passive, constant, offset)


def symmetrize(g: BimatrixGame, tol: Tolerances = DEFAULT_TOL) -> MatrixGame:
    """Recover A from a symmetric bimatrix game (A, A^T)."""
    if g.l_r != g.l_c:
        raise DimensionError(f"symmetric games need l_r == l_c, got {g.shape}")
    gap = float(np.linalg.norm(g.a - g.b.T))
    if gap > tol.abs + tol.rel * np.linalg.norm(g.a):
        raise NotSymmetricError(f"game is not symmetric: ||A - B^T|| = {gap:.3e}", residual=gap)
    return MatrixGame(g.a)

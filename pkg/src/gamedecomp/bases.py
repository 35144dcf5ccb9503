"""Explicit spanning matrices for the game subspaces and their dimensions.

Strategy indices are 1-based throughout this module so that the matrices can
be compared entry by entry with the usual textbook displays.

    K(i, j)   symmetric, zero row/column sums; spans the anti-zero-sum games
    N(i, j)   extended Rock-Paper-Scissors on {1, i, j}; spans anti-potential games
    E_gamma   ones in column j (passive games)
    E_eta     ones in row i (constant games)
    E_kappa   [[-1, 1], [1, -1]] block at rows {i, i+1}, columns {j, j+1}
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from .core import BimatrixGame, DomainError


class BasisKind(enum.Enum):
    K = "K"
    N = "N"
    E_GAMMA = "E_gamma"
    E_ETA = "E_eta"
    E_KAPPA = "E_kappa"
    MP_ANTI_POTENTIAL = "MP_anti_potential"
    MP_ANTI_ZERO_SUM = "MP_anti_zero_sum"


@dataclass(frozen=True)
class DimensionReport:
    total: int
    dim_potential: int
    dim_anti_potential: int
    dim_zero_sum: int
    dim_anti_zero_sum: int
    dim_kernel: int
    dim_range: int

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "potential": self.dim_potential,
            "anti_potential": self.dim_anti_potential,
            "zero_sum": self.dim_zero_sum,
            "anti_zero_sum": self.dim_anti_zero_sum,
            "kernel": self.dim_kernel,
            "range": self.dim_range,
        }


def _check_index(name, value, lo, hi):
    if not (isinstance(value, (int, np.integer)) and lo <= value <= hi):
        raise DomainError(f"{name}={value!r} out of range [{lo}, {hi}]")


def basis_K(l: int, i: int, j: int) -> np.ndarray:
    """-1 at (i,i) and (j,j), +1 at (i,j) and (j,i)."""
    _check_index("l", l, 2, np.inf)
    _check_index("i", i, 1, l - 1)
    _check_index("j", j, i + 1, l)
    k = np.zeros((l, l))
    i, j = i - 1, j - 1
    k[i, i] = k[j, j] = -1.0
    k[i, j] = k[j, i] = 1.0
    return k


def basis_N(l: int, i: int, j: int) -> np.ndarray:
    """Rock-Paper-Scissors on the strategies {1, i, j}; everything else zero."""
    _check_index("l", l, 3, np.inf)
    _check_index("i", i, 2, l - 1)
    _check_index("j", j, i + 1, l)
    n = np.zeros((l, l))
    i, j = i - 1, j - 1
    n[0, i], n[0, j] = -1.0, 1.0
    n[i, 0], n[i, j] = 1.0, -1.0
    n[j, 0], n[j, i] = -1.0, 1.0
    return n


def basis_E(kind, l_r: int, l_c: int | None = None, i: int = 1, j: int = 1):
    """Elementary kernel/range matrices and the Matching Pennies pairs.

    For ``E_gamma`` only ``j`` is used and for ``E_eta`` only ``i``. The two
    Matching Pennies kinds return a :class:`BimatrixGame`.
    """
    kind = BasisKind(kind)
    if l_c is None:
        l_c = l_r
    _check_index("l_r", l_r, 1, np.inf)
    _check_index("l_c", l_c, 1, np.inf)
    if kind is BasisKind.K:
        return basis_K(l_r, i, j)
    if kind is BasisKind.N:
        return basis_N(l_r, i, j)
    m = np.zeros((l_r, l_c))
    if kind is BasisKind.E_GAMMA:
        _check_index("j", j, 1, l_c)
        m[:, j - 1] = 1.0
        return m
    if kind is BasisKind.E_ETA:
        _check_index("i", i, 1, l_r)
        m[i - 1, :] = 1.0
        return m
    _check_index("i", i, 1, l_r - 1)
    _check_index("j", j, 1, l_c - 1)
    m[i - 1 : i + 1, j - 1 : j + 1] = [[-1.0, 1.0], [1.0, -1.0]]
    if kind is BasisKind.MP_ANTI_POTENTIAL:
        return BimatrixGame(m, -m)
    if kind is BasisKind.MP_ANTI_ZERO_SUM:
        return BimatrixGame(m, m)
    return m


def E_gamma(l_r: int, j: int, l_c: int | None = None) -> np.ndarray:
    return basis_E(BasisKind.E_GAMMA, l_r, l_c, j=j)


def E_eta(l_r: int, i: int, l_c: int | None = None) -> np.ndarray:
    return basis_E(BasisKind.E_ETA, l_r, l_c, i=i)


def E_kappa(l_r: int, i: int, j: int, l_c: int | None = None) -> np.ndarray:
    return basis_E(BasisKind.E_KAPPA, l_r, l_c, i=i, j=j)


# Generating families. Index ranges follow the counts of the dimension formulas.


def K_family(l: int) -> Iterator[np.ndarray]:
    for i, j in combinations(range(1, l + 1), 2):
        yield basis_K(l, i, j)


def N_family(l: int) -> Iterator[np.ndarray]:
    # i runs over 2..l-1; the alternative reading i = 2..l adds no elements
    for i, j in combinations(range(2, l + 1), 2):
        yield basis_N(l, i, j)


def kernel_family(l: int) -> Iterator[np.ndarray]:
    for i in range(2, l + 1):
        yield E_eta(l, i)
    for j in range(1, l + 1):
        yield E_gamma(l, j)


def range_family(l_r: int, l_c: int | None = None) -> Iterator[np.ndarray]:
    l_c = l_r if l_c is None else l_c
    for i in range(1, l_r):
        for j in range(1, l_c):
            yield E_kappa(l_r, i, j, l_c)


def mp_anti_potential_family(l_r: int, l_c: int) -> Iterator[BimatrixGame]:
    for i in range(1, l_r):
        for j in range(1, l_c):
            yield basis_E(BasisKind.MP_ANTI_POTENTIAL, l_r, l_c, i, j)


def mp_anti_zero_sum_family(l_r: int, l_c: int) -> Iterator[BimatrixGame]:
    for i in range(1, l_r):
        for j in range(1, l_c):
            yield basis_E(BasisKind.MP_ANTI_ZERO_SUM, l_r, l_c, i, j)


def bimatrix_kernel_family(l_r: int, l_c: int) -> Iterator[BimatrixGame]:
    zero = np.zeros((l_r, l_c))
    for i in range(2, l_r + 1):
        yield BimatrixGame(E_eta(l_r, i, l_c), zero)
    for j in range(1, l_c + 1):
        yield BimatrixGame(E_gamma(l_r, j, l_c), zero)
    for i in range(1, l_r + 1):
        yield BimatrixGame(zero, E_eta(l_r, i, l_c))
    for j in range(2, l_c + 1):
        yield BimatrixGame(zero, E_gamma(l_r, j, l_c))


def bimatrix_range_family(l_r: int, l_c: int) -> Iterator[BimatrixGame]:
    zero = np.zeros((l_r, l_c))
    for m in range_family(l_r, l_c):
        yield BimatrixGame(m, zero)
        yield BimatrixGame(zero, m)


def vectorize(items) -> np.ndarray:
    """Stack matrices, bimatrix games or tensor tuples as rows of a 2-d array."""
    rows = []
    for it in items:
        if isinstance(it, BimatrixGame):
            rows.append(np.concatenate([it.a.ravel(), it.b.ravel()]))
        elif isinstance(it, (tuple, list)):
            rows.append(np.concatenate([np.ravel(t) for t in it]))
        else:
            rows.append(np.ravel(getattr(it, "payoff", it)))
    return np.array(rows, dtype=float)


def numerical_rank(items) -> int:
    """Rank with threshold max(shape) * eps * sigma_max."""
    m = vectorize(items)
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > max(m.shape) * np.finfo(float).eps * s[0]))


def dimensions(l: int) -> DimensionReport:
    if l < 2:
        raise DomainError(f"l must be >= 2, got {l}")
    return DimensionReport(
        total=l * l,
        dim_potential=l * (l + 1) // 2 + l - 1,
        dim_anti_potential=(l - 1) * (l - 2) // 2,
        dim_zero_sum=l * (l - 1) // 2 + l,
        dim_anti_zero_sum=l * (l - 1) // 2,
        dim_kernel=2 * l - 1,
        dim_range=(l - 1) ** 2,
    )


def bimatrix_dimensions(l_r: int, l_c: int) -> DimensionReport:
    if l_r < 2 or l_c < 2:
        raise DomainError(f"l_r and l_c must be >= 2, got {l_r}, {l_c}")
    mp = (l_r - 1) * (l_c - 1)
    total = 2 * l_r * l_c
    return DimensionReport(
        total=total,
        dim_potential=total - mp,
        dim_anti_potential=mp,
        dim_zero_sum=total - mp,
        dim_anti_zero_sum=mp,
        dim_kernel=2 * (l_r + l_c) - 2,
        dim_range=2 * mp,
    )

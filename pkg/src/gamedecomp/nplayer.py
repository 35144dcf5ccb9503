"""n-player games with a common strategy count l.

``payoffs[p]`` is player p's payoff tensor with n axes of length l; axis q is
indexed by player q's strategy. Players and strategies are 0-based here,
except in witnesses and index tuples handed back to users.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

import numpy as np

from .core import BimatrixGame, CapacityError, DimensionError, DomainError

MAX_PROFILES = 4096
# dense generator matrices beyond this many entries are refused
MAX_GENERATOR_ENTRIES = 50_000_000


@dataclass(frozen=True, eq=False)
class TensorGame:
    payoffs: tuple

    def __post_init__(self):
        ts = [np.array(t, dtype=float) for t in self.payoffs]
        n = len(ts)
        if n < 2:
            raise DimensionError("a tensor game needs at least 2 players")
        shape = ts[0].shape
        if len(shape) != n or len(set(shape)) != 1 or shape[0] < 2:
            raise DimensionError(f"each payoff must have {n} axes of a common length >= 2, got {shape}")
        if any(t.shape != shape for t in ts):
            raise DimensionError("payoff tensors differ in shape")
        if not all(np.all(np.isfinite(t)) for t in ts):
            raise DomainError("payoff entries must be finite")
        for t in ts:
            t.setflags(write=False)
        object.__setattr__(self, "payoffs", tuple(ts))

    @property
    def n(self) -> int:
        return len(self.payoffs)

    @property
    def l(self) -> int:
        return self.payoffs[0].shape[0]

    @classmethod
    def from_bimatrix(cls, g: BimatrixGame) -> "TensorGame":
        return cls((g.a, g.b))

    @classmethod
    def zeros(cls, n: int, l: int) -> "TensorGame":
        return cls(tuple(np.zeros((l,) * n) for _ in range(n)))

    @classmethod
    def from_vector(cls, v, n: int, l: int) -> "TensorGame":
        v = np.asarray(v, dtype=float).reshape(n, *((l,) * n))
        return cls(tuple(v))

    def to_bimatrix(self) -> BimatrixGame:
        if self.n != 2:
            raise DimensionError("only 2-player tensor games are bimatrix games")
        return BimatrixGame(*self.payoffs)

    def vector(self) -> np.ndarray:
        return np.concatenate([t.ravel() for t in self.payoffs])

    def norm(self) -> float:
        return float(np.linalg.norm(self.vector()))

    def _check(self, other):
        if not isinstance(other, TensorGame) or other.n != self.n or other.l != self.l:
            raise DimensionError("tensor games must share n and l")

    def __add__(self, other):
        self._check(other)
        return TensorGame(tuple(a + b for a, b in zip(self.payoffs, other.payoffs)))

    def __sub__(self, other):
        self._check(other)
        return TensorGame(tuple(a - b for a, b in zip(self.payoffs, other.payoffs)))

    def __neg__(self):
        return TensorGame(tuple(-a for a in self.payoffs))

    def __mul__(self, c):
        return TensorGame(tuple(c * a for a in self.payoffs))

    __rmul__ = __mul__

    def __repr__(self):
        return f"TensorGame(n={self.n}, l={self.l})"


def tensor_inner_product(g1: TensorGame, g2: TensorGame) -> float:
    g1._check(g2)
    return float(sum(np.sum(a * b) for a, b in zip(g1.payoffs, g2.payoffs)))


def _check_nl(n, l):
    if n < 2 or l < 2:
        raise DomainError(f"need n >= 2 and l >= 2, got n={n}, l={l}")


def potential_dims(n: int, l: int) -> int:
    _check_nl(n, l)
    return l**n - 1 + n * l ** (n - 1)


def anti_potential_dims(n: int, l: int) -> int:
    _check_nl(n, l)
    return n * l**n - potential_dims(n, l)


def anti_potential_dims_recursive(n: int, l: int) -> int:
    """Same number built up from the 2-player value (l-1)^2 one player at a time."""
    _check_nl(n, l)
    d = (l - 1) ** 2
    for m in range(2, n):
        d += (l - 1) ** 2 * m * l ** (m - 1)
    return d


def anti_zero_sum_dims(n: int, l: int) -> int:
    _check_nl(n, l)
    return (l - 1) ** n


def tensor_dimensions(n: int, l: int) -> dict:
    total = n * l**n
    return {
        "total": total,
        "potential": potential_dims(n, l),
        "anti_potential": anti_potential_dims(n, l),
        "zero_sum": total - anti_zero_sum_dims(n, l),
        "anti_zero_sum": anti_zero_sum_dims(n, l),
    }


# Three players, two strategies each. Rows are player 1's strategy; of the
# four columns the first two have player 3 on strategy 1, and within each
# pair player 2 plays strategy 1 then 2. Cells list the payoffs of players 1, 2, 3.
_M_TABLES = {
    1: ["-1,1,0 1,-1,0 0,0,0 0,0,0", "1,-1,0 -1,1,0 0,0,0 0,0,0"],
    2: ["-1,0,1 0,0,0 1,0,-1 0,0,0", "1,0,-1 0,0,0 -1,0,1 0,0,0"],
    3: ["0,0,0 -1,0,1 0,0,0 1,0,-1", "0,0,0 1,0,-1 0,0,0 -1,0,1"],
    4: ["0,-1,1 0,1,-1 0,1,-1 0,-1,1", "0,0,0 0,0,0 0,0,0 0,0,0"],
    5: ["0,0,0 0,0,0 0,0,0 0,0,0", "0,-1,1 0,1,-1 0,1,-1 0,-1,1"],
    6: ["0,0,0 0,0,0 -1,1,0 1,-1,0", "0,0,0 0,0,0 1,-1,0 -1,1,0"],
}


def _from_table(rows) -> TensorGame:
    t = np.zeros((3, 2, 2, 2))
    for i1, row in enumerate(rows):
        for k, cell in enumerate(row.split()):
            i3, i2 = divmod(k, 2)
            t[:, i1, i2, i3] = [float(v) for v in cell.split(",")]
    return TensorGame(tuple(t))


def three_player_anti_potential_basis() -> list:
    """The five games M_1, ..., M_5 spanning the anti-potential 3-player 2-strategy games."""
    return [_from_table(_M_TABLES[k]) for k in range(1, 6)]


def three_player_M6() -> TensorGame:
    """Matching Pennies between players 1 and 2 with player 3 fixed on strategy 2."""
    return _from_table(_M_TABLES[6])


def _guard(n, l):
    _check_nl(n, l)
    if l**n > MAX_PROFILES:
        raise CapacityError(f"l^n = {l**n} exceeds the dense limit {MAX_PROFILES}")


def passive_tensors(n: int, l: int) -> list:
    """Games where one player's payoff is 1 along its own axis at one profile of the others."""
    _guard(n, l)
    out = []
    for q in range(n):
        for rest in product(range(l), repeat=n - 1):
            ts = [np.zeros((l,) * n) for _ in range(n)]
            idx = list(rest)
            idx.insert(q, slice(None))
            ts[q][tuple(idx)] = 1.0
            out.append(TensorGame(tuple(ts)))
    return out


def identical_interest_tensors(n: int, l: int) -> list:
    _guard(n, l)
    out = []
    for prof in product(range(l), repeat=n):
        e = np.zeros((l,) * n)
        e[prof] = 1.0
        out.append(TensorGame(tuple(e for _ in range(n))))
    return out


def zero_sum_pair_tensors(n: int, l: int) -> list:
    """(..., E, ..., -E, ...) with a single profile indicator E, for players 1 < k."""
    _guard(n, l)
    out = []
    for prof in product(range(l), repeat=n):
        e = np.zeros((l,) * n)
        e[prof] = 1.0
        for k in range(1, n):
            ts = [np.zeros((l,) * n) for _ in range(n)]
            ts[0], ts[k] = e, -e
            out.append(TensorGame(tuple(ts)))
    return out


def anti_zero_sum_tensor_basis(n: int, l: int) -> list:
    """(E, ..., E) for every profile i with all i_p >= 2.

    E is supported on the profiles whose p-th coordinate lies in {1, i_p}; there
    it equals -(-1)^k with k the number of coordinates equal to i_p. Profiles
    are enumerated with player 1's index varying fastest.
    """
    _guard(n, l)
    out = []
    for rev in product(range(1, l), repeat=n):
        top = rev[::-1]
        e = np.zeros((l,) * n)
        for mask in product((0, 1), repeat=n):
            prof = tuple(top[p] if mask[p] else 0 for p in range(n))
            e[prof] = -((-1) ** sum(mask))
        out.append(TensorGame(tuple(e for _ in range(n))))
    return out


@dataclass(frozen=True, eq=False)
class ZeroSumCheck:
    holds: bool
    residual: float
    witness: Optional[list] = None

    def __bool__(self):
        return self.holds

    def reconstruct(self) -> Optional[TensorGame]:
        if self.witness is None:
            return None
        total = self.witness[0]
        for g in self.witness[1:]:
            total = total + g
        return total


def is_exact_zero_sum_tensor(g: TensorGame, tol: float = 1e-9) -> ZeroSumCheck:
    """Profile-wise payoff sums vanish; the witness writes g as a sum of (Z, -Z) pairs.

    At each profile the payoff vector lies in {v : sum v = 0}, which has the
    basis (1,-1,0,...), (1,0,-1,...), ...; pair k carries the coefficient -A_k
    for player 1 and A_k for player k.
    """
    s = np.sum(g.payoffs, axis=0)
    res = float(np.max(np.abs(s)))
    if res > tol * (1.0 + g.norm()):
        return ZeroSumCheck(False, res)
    pairs = []
    zero = np.zeros_like(g.payoffs[0])
    for k in range(1, g.n):
        ts = [zero] * g.n
        ts[0], ts[k] = -g.payoffs[k], g.payoffs[k]
        pairs.append(TensorGame(tuple(ts)))
    return ZeroSumCheck(True, res, pairs)


def _project(generators: list, v: np.ndarray) -> np.ndarray:
    gm = np.array([t.vector() for t in generators])
    if gm.size > MAX_GENERATOR_ENTRIES:
        raise CapacityError(f"generator matrix with {gm.size} entries is too large")
    gram = gm @ gm.T
    coef = np.linalg.pinv(gram, rcond=1e-10, hermitian=True) @ (gm @ v)
    return gm.T @ coef


@dataclass(frozen=True, eq=False)
class TensorDecomposition:
    potential_component: TensorGame
    anti_potential_component: TensorGame
    zero_sum_component: TensorGame
    anti_zero_sum_component: TensorGame


def decompose_tensor(g: TensorGame) -> TensorDecomposition:
    """Orthogonal projections onto the potential and zero-sum subspaces.

    Potential games are spanned by identical-interest and passive games,
    zero-sum games by (Z, -Z) pairs and passive games.
    """
    n, l = g.n, g.l
    _guard(n, l)
    v = g.vector()
    passive = passive_tensors(n, l)
    pot = _project(identical_interest_tensors(n, l) + passive, v)
    zs = _project(zero_sum_pair_tensors(n, l) + passive, v)

    def tg(x):
        return TensorGame.from_vector(x, n, l)

    return TensorDecomposition(tg(pot), tg(v - pot), tg(zs), tg(v - zs))

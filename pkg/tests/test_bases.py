import numpy as np
import pytest

from gamedecomp.bases import (
    BasisKind,
    E_eta,
    E_gamma,
    E_kappa,
    K_family,
    N_family,
    basis_E,
    basis_K,
    basis_N,
    bimatrix_dimensions,
    bimatrix_kernel_family,
    bimatrix_range_family,
    dimensions,
    kernel_family,
    mp_anti_potential_family,
    mp_anti_zero_sum_family,
    numerical_rank,
    range_family,
)
from gamedecomp.core import BimatrixGame, DomainError, inner_product

RPS = np.array([[0, -1, 1], [1, 0, -1], [-1, 1, 0]], dtype=float)


def test_K_examples():
    assert np.array_equal(basis_K(3, 1, 2), [[-1, 1, 0], [1, -1, 0], [0, 0, 0]])
    assert np.array_equal(basis_K(2, 1, 2), [[-1, 1], [1, -1]])
    k = basis_K(5, 2, 4)
    assert np.all(k.sum(axis=1) == 0) and np.all(k.sum(axis=0) == 0)
    assert np.array_equal(k, k.T)


@pytest.mark.parametrize("args", [(3, 2, 2), (3, 0, 2), (3, 2, 4), (3, 2, 1), (1, 1, 2)])
def test_K_index_errors(args):
    with pytest.raises(DomainError):
        basis_K(*args)


def test_N_examples():
    assert np.array_equal(basis_N(3, 2, 3), RPS)
    n = basis_N(4, 2, 3)
    assert np.all(n[3] == 0) and np.all(n[:, 3] == 0)
    assert np.array_equal(n[:3, :3], RPS)
    for i, j in [(2, 3), (2, 5), (3, 4), (4, 5)]:
        n = basis_N(5, i, j)
        assert np.array_equal(n.T, -n)
        sub = n[np.ix_([0, i - 1, j - 1], [0, i - 1, j - 1])]
        assert np.array_equal(sub, RPS)


@pytest.mark.parametrize("args", [(2, 2, 3), (4, 1, 3), (4, 3, 3), (4, 2, 5)])
def test_N_index_errors(args):
    with pytest.raises(DomainError):
        basis_N(*args)


def test_E_examples(rng):
    assert np.array_equal(E_gamma(3, 2), [[0, 1, 0]] * 3)
    assert np.array_equal(E_eta(3, 2), E_gamma(3, 2).T)
    assert np.array_equal(E_kappa(2, 1, 1), [[-1, 1], [1, -1]])
    for _ in range(10):
        i, j = rng.integers(1, 5, size=2)
        e = E_kappa(5, int(i), int(j))
        assert np.all(np.ones(5) @ e == 0) and np.all(e @ np.ones(5) == 0)
    with pytest.raises(DomainError):
        E_kappa(3, 3, 1)
    with pytest.raises(DomainError):
        E_gamma(3, 4)


def test_basis_E_dispatch():
    assert np.array_equal(basis_E("K", 3, 3, 1, 2), basis_K(3, 1, 2))
    assert np.array_equal(basis_E(BasisKind.N, 3, 3, 2, 3), RPS)
    mp = basis_E(BasisKind.MP_ANTI_POTENTIAL, 2, 2, 1, 1)
    assert isinstance(mp, BimatrixGame) and np.array_equal(mp.b, -mp.a)
    az = basis_E(BasisKind.MP_ANTI_ZERO_SUM, 2, 3, 1, 2)
    assert np.array_equal(az.a, az.b) and az.shape == (2, 3)
    with pytest.raises(ValueError):
        basis_E("bogus", 3)


def test_dimension_examples():
    d = dimensions(3)
    assert (d.dim_potential, d.dim_anti_potential, d.dim_zero_sum, d.dim_anti_zero_sum) == (8, 1, 6, 3)
    assert (d.dim_kernel, d.dim_range) == (5, 4)
    d = dimensions(4)
    assert (d.dim_anti_potential, d.dim_anti_zero_sum, d.dim_kernel) == (3, 6, 7)
    b = bimatrix_dimensions(2, 2)
    assert (b.dim_potential, b.dim_anti_potential) == (7, 1)
    with pytest.raises(DomainError):
        dimensions(1)


@pytest.mark.parametrize("l", range(2, 7))
def test_dimension_report_is_consistent(l):
    d = dimensions(l)
    assert d.dim_anti_potential + d.dim_anti_zero_sum + d.dim_kernel == d.total == l * l
    assert d.dim_potential + d.dim_anti_potential == d.total
    assert d.dim_zero_sum + d.dim_anti_zero_sum == d.total
    assert d.dim_range == d.dim_anti_potential + d.dim_anti_zero_sum


@pytest.mark.parametrize("l", range(2, 7))
def test_family_ranks(l):
    d = dimensions(l)
    assert numerical_rank(K_family(l)) == d.dim_anti_zero_sum
    assert numerical_rank(N_family(l)) == d.dim_anti_potential
    assert numerical_rank(kernel_family(l)) == d.dim_kernel
    assert numerical_rank(range_family(l)) == d.dim_range
    # potential = anti-zero-sum + kernel; zero-sum = anti-potential + kernel
    assert numerical_rank(list(K_family(l)) + list(kernel_family(l))) == d.dim_potential
    assert numerical_rank(list(N_family(l)) + list(kernel_family(l))) == d.dim_zero_sum


@pytest.mark.parametrize("lr,lc", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_bimatrix_family_ranks(lr, lc):
    d = bimatrix_dimensions(lr, lc)
    assert numerical_rank(mp_anti_potential_family(lr, lc)) == d.dim_anti_potential
    assert numerical_rank(mp_anti_zero_sum_family(lr, lc)) == d.dim_anti_zero_sum
    assert numerical_rank(bimatrix_kernel_family(lr, lc)) == d.dim_kernel
    assert numerical_rank(bimatrix_range_family(lr, lc)) == d.dim_range
    assert d.dim_kernel + d.dim_range == d.total


@pytest.mark.parametrize("l", [3, 4, 5])
def test_cross_orthogonality(l, rng):
    ks, ns = list(K_family(l)), list(N_family(l))
    for n in ns:
        assert all(inner_product(n, k) == 0 for k in ks)
        assert all(inner_product(n, e) == 0 for e in kernel_family(l))
        s = rng.normal(size=(l, l))
        assert abs(inner_product(n, s + s.T)) < 1e-12
    for k in ks:
        assert all(inner_product(k, e) == 0 for e in kernel_family(l))


def test_numerical_rank_of_nothing():
    assert numerical_rank([]) == 0
    assert numerical_rank([np.zeros((2, 2))]) == 0

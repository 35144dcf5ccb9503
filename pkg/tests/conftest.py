import numpy as np
import pytest

from gamedecomp.bases import K_family, N_family


def grps(a, b):
    """Generalised Rock-Paper-Scissors: lose a, win b."""
    return np.array([[0.0, -a, b], [b, 0.0, -a], [-a, b, 0.0]], dtype=float)


RPS = grps(1, 1)


def random_anti_potential(rng, l):
    n = rng.normal(size=(l, l))
    n = n - n.T
    return n - n.mean(axis=0, keepdims=True) - n.mean(axis=1, keepdims=True) + n.mean()


def random_anti_zero_sum(rng, l):
    s = rng.normal(size=(l, l))
    s = s + s.T
    return s - s.mean(axis=0, keepdims=True) - s.mean(axis=1, keepdims=True) + s.mean()


def random_kernel(rng, l_r, l_c=None):
    l_c = l_r if l_c is None else l_c
    return rng.normal(size=(l_r, 1)) + rng.normal(size=(1, l_c))


def random_interior(rng, l, size=None):
    return rng.dirichlet(np.ones(l), size=size)


def lyapunov_class_game(rng, l):
    """sum alpha_ij K(ij) with alpha > 0 plus an anti-potential game."""
    ks = list(K_family(l))
    a = sum(rng.uniform(0.5, 2.0) * k for k in ks)
    ns = list(N_family(l))
    if ns:
        a = a + sum(rng.uniform(-1.0, 1.0) * n for n in ns)
    return a


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])

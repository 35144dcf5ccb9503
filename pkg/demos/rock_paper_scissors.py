"""Rock-Paper-Scissors with unequal win and loss payoffs.

A win pays w and a loss costs l. Splitting the payoff matrix shows how much
of the game is pure cycling and how much is a shared incentive, and the
sign of w - l decides whether the mixed equilibrium attracts.
"""

from textwrap import indent

import numpy as np

from gamedecomp import decompose_symmetric, is_potential, is_zero_sum, stability_report


def rps(win, loss):
    return np.array([[0, -loss, win], [win, 0, -loss], [-loss, win, 0]], dtype=float)


np.set_printoptions(precision=3, suppress=True)

for win, loss in [(1, 1), (2, 1), (1, 2)]:
    a = rps(win, loss)
    d = decompose_symmetric(a)
    rep = stability_report(a)
    print(f"win={win}, loss={loss}")
    print("  cyclic part (antisymmetric):")
    print(indent(str(d.anti_potential), "    "))
    print("  symmetric part:")
    print(indent(str(d.anti_zero_sum), "    "))
    print(f"  potential? {bool(is_potential(a))}   zero-sum? {bool(is_zero_sum(a))}")
    print(f"  tangent eigenvalues {np.round(rep.tangent_eigenvalues, 4)}")
    verdict = "strictly stable" if rep.is_strict_stable else "null-stable" if rep.is_null_stable else "not stable"
    print(f"  -> {verdict}\n")

# The cyclic part never changes shape: it is always (w + l)/2 times the
# standard Rock-Paper-Scissors matrix. Only the symmetric part feels w - l.
base = decompose_symmetric(rps(1, 1)).anti_potential
for win, loss in [(3, 1), (0.5, 2)]:
    same = np.allclose(decompose_symmetric(rps(win, loss)).anti_potential, (win + loss) / 2 * base)
    print(f"rps({win}, {loss}): cyclic part equals {(win + loss) / 2} x standard RPS? {same}")

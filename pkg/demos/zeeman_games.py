"""Three- and four-strategy games with a strict Nash equilibrium on a vertex
and an attracting interior equilibrium at the same time.
"""

import numpy as np

from gamedecomp import Zeeman3Params, Zeeman4Params, integrate, zeeman3, zeeman3_classify, zeeman4, zeeman4_classify

np.set_printoptions(precision=4, suppress=True)

p3 = Zeeman3Params(alpha=1.0, beta=-2.0, eta=1.9)
rep = zeeman3_classify(p3)
print("three strategies, alpha=1, beta=-2, eta=1.9")
print(zeeman3(p3).payoff)
print(f"  strict NE / ESS at strategy {rep.ess_strategy}, interior equilibrium: {rep.interior_type}")
print(f"  Jacobian eigenvalues at the barycenter: {np.round(rep.jacobian_eigenvalues, 4)}")

# rotating the eigenbasis keeps the spectrum, so the interior verdict is unchanged
for theta in (0.5, 1.5, 2.5):
    r = zeeman3_classify(Zeeman3Params(1.0, -2.0, 1.9, theta))
    print(f"  theta={theta}: interior {r.interior_type}, strict NE strategies {r.strict_nash}")

p4 = Zeeman4Params(alpha=-2.5, beta=-2.5, gamma=2.0, eta=1.9)
rep = zeeman4_classify(p4)
a = zeeman4(p4).payoff
print("\nfour strategies, alpha=beta=-2.5, gamma=2, eta=1.9")
print(a)
print(f"  strict NE / ESS at strategy {rep.ess_strategy}, interior equilibrium: {rep.interior_type}")

# two starting points, two different long-run outcomes
for x0 in ([0.3, 0.2, 0.25, 0.25], [0.05, 0.85, 0.05, 0.05]):
    end = integrate(a, x0, 200.0, 0.02).states[-1]
    print(f"  start {x0} -> {np.round(end, 3)}")

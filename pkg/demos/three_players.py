"""Three players with two strategies each.

The anti-potential games form a 5-dimensional space spanned by Matching
Pennies played by one pair while the third player sits out. Any game splits
orthogonally into a potential part and an anti-potential part.
"""

import numpy as np

from gamedecomp import (
    TensorGame,
    anti_potential_dims,
    anti_zero_sum_tensor_basis,
    decompose_tensor,
    is_exact_zero_sum_tensor,
    tensor_inner_product,
    three_player_anti_potential_basis,
)

basis = three_player_anti_potential_basis()
print(f"anti-potential dimension for n=3, l=2: {anti_potential_dims(3, 2)}")
print(f"rank of the five Matching-Pennies games: {np.linalg.matrix_rank([g.vector() for g in basis])}")
print(f"each one is exactly zero-sum: {all(is_exact_zero_sum_tensor(g) for g in basis)}")

rng = np.random.default_rng(0)
g = TensorGame(tuple(rng.normal(size=(2, 2, 2)) for _ in range(3)))
d = decompose_tensor(g)
print(f"\nrandom game, norm {g.norm():.4f}")
print(f"  potential part norm      {d.potential_component.norm():.4f}")
print(f"  anti-potential part norm {d.anti_potential_component.norm():.4f}")
print(f"  <potential, anti-potential> = {tensor_inner_product(d.potential_component, d.anti_potential_component):.1e}")

# the anti-potential part is a combination of the five basis games
m = np.array([b.vector() for b in basis]).T
coef, *_ = np.linalg.lstsq(m, d.anti_potential_component.vector(), rcond=None)
print(f"  coordinates in the Matching-Pennies basis: {np.round(coef, 4)}")
print(f"  fit residual: {np.linalg.norm(m @ coef - d.anti_potential_component.vector()):.1e}")

(e,) = anti_zero_sum_tensor_basis(3, 2)
print("\nthe single anti-zero-sum direction (same tensor for every player):")
print(e.payoffs[0])

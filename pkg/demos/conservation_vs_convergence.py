"""Replicator dynamics on three games with the same cyclic structure.

Standard Rock-Paper-Scissors orbits forever: sum(log x) is conserved.
Rewarding wins more than losses turns the orbit into an inward spiral and
the same quantity becomes a strict Lyapunov function.
"""

import io

import numpy as np

from gamedecomp import divergence, integrate, lyapunov_derivative, stability_report

RPS = np.array([[0, -1, 1], [1, 0, -1], [-1, 1, 0]], dtype=float)
SPIRAL = np.array([[0, -1, 2], [2, 0, -1], [-1, 2, 0]], dtype=float)
x0 = [0.5, 0.3, 0.2]
bary = np.full(3, 1 / 3)

traj = integrate(RPS, x0, 50.0, 0.01, track_H=True)
drift = np.max(np.abs(traj.invariant_values - traj.invariant_values[0]))
print("Rock-Paper-Scissors, t in [0, 50], RK4 step 0.01")
print(f"  sum(log x) drift over the run: {drift:.2e}")
print(f"  divergence of the field at x0: {divergence(RPS, x0):.1e}")
print(f"  distance to barycenter at t=0 and t=50: {np.linalg.norm(traj.states[0] - bary):.4f}, "
      f"{np.linalg.norm(traj.states[-1] - bary):.4f}\n")

traj = integrate(SPIRAL, x0, 50.0, 0.01, track_H=True)
print("win 2 / loss 1 variant")
print(f"  strictly stable: {stability_report(SPIRAL).is_strict_stable}")
print(f"  d/dt sum(log x) at x0: {lyapunov_derivative(SPIRAL, x0):.4f} (positive: climbing toward the barycenter)")
for t in (0, 1, 5, 10, 20, 50):
    k = int(np.argmin(np.abs(traj.times - t)))
    print(f"  t={t:>2}: |x - barycenter| = {np.linalg.norm(traj.states[k] - bary):.2e}, sum(log x) = {traj.invariant_values[k]:.6f}")

print("\na short trajectory as CSV:")
buf = io.StringIO()
integrate(RPS, x0, 0.03, 0.01, track_H=True).write_csv(buf)
print(buf.getvalue())

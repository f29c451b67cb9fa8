"""Classical frames in a right quaternionic Hilbert space.

The running example is the orthonormal basis of H^4 with its first
vector repeated: five members whose frame operator is diag(2, 1, 1, 1),
so the optimal bounds are 1 and 2.  The canonical dual inverts those
bounds and reconstructs every vector exactly.
"""

import numpy as np

from quatframes import (
    QVector,
    VectorFrame,
    analysis,
    canonical_dual,
    frame_operator,
    inner,
    report,
)

basis = [QVector.basis(4, k) for k in range(4)]
members = [basis[0]] + basis
frame = VectorFrame(4, members)

rep = report(frame)
print(f"members: {len(members)}  bounds: ({rep.lower:.6g}, {rep.upper:.6g})")
print(f"flags: frame={rep.is_frame} tight={rep.is_tight} "
      f"parseval={rep.is_parseval} exact={rep.is_exact}")
print("frame operator real part:")
print(frame_operator(frame).data[..., 0])

# the frame inequality in action: analysis energy vs squared norm
gen = np.random.default_rng(0)
x = QVector(gen.standard_normal((4, 4)))
energy = sum(abs(c) ** 2 for c in analysis(frame, x))
print()
print(f"||x||^2 = {x.norm_sq():.6f}, analysis energy = {energy:.6f}")
print(f"ratio = {energy / x.norm_sq():.6f}  (must sit inside [1, 2])")

# the canonical dual reconstructs
dual = canonical_dual(frame)
dual_rep = report(dual)
print()
print(f"dual bounds: ({dual_rep.lower:.6g}, {dual_rep.upper:.6g}) "
      f"(reciprocals, reversed)")

rebuilt = QVector.zeros(4)
for u, d in zip(frame.members, dual.members):
    rebuilt = rebuilt + u * inner(d, x)
print(f"reconstruction residual: {(rebuilt - x).norm():.3e}")

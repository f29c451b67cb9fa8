"""Perturbation stability of operator frames.

Two sufficient conditions are checked.  The first bounds the analysis
energy of the difference frame against both originals plus an offset
mu*||x||; the second bounds the synthesis-side mismatch.  Each verdict
compares the predicted bound interval against the perturbed frame's
measured bounds.
"""

import numpy as np

from quatframes import (
    OperatorFrame,
    QMatrix,
    Theorem1Params,
    Theorem2Params,
    check_stability_t1,
    check_stability_t2,
    difference_frame,
    fit_params_t1,
    fit_params_t2,
    op_frame_operator,
    hermitian_eigenvalues,
)


def rows_of_identity(n):
    members = []
    for k in range(n):
        data = np.zeros((1, n, 4))
        data[0, k, 0] = 1.0
        members.append(QMatrix(data))
    return OperatorFrame(n, members)


def scaled(frame, s):
    return OperatorFrame(frame.space_dim,
                         [QMatrix(m.data * s) for m in frame.members])


base = rows_of_identity(5)
pert = scaled(base, 0.9)

# fit the smallest constants the difference Gram supports
params1 = fit_params_t1(base, pert)
print(f"fitted analysis-side constants: lambda1={params1.lambda1}, "
      f"lambda2={params1.lambda2}, mu={params1.mu:.6g}")
v1 = check_stability_t1(base, pert, params1)
print(f"  hypothesis_ok={v1.hypothesis_ok}, frame_claim={v1.frame_claim}")
print(f"  predicted ({v1.predicted_lower:.6g}, {v1.predicted_upper:.6g}),"
      f" measured ({v1.measured_lower:.6g}, {v1.measured_upper:.6g}),"
      f" consistent={v1.consistent}")

params2 = fit_params_t2(base, pert)
print(f"\nfitted synthesis-side constants: lambda={params2.lam}, "
      f"mu={params2.mu:.6g}")
v2 = check_stability_t2(base, pert, params2)
print(f"  hypothesis_ok={v2.hypothesis_ok}, frame_claim={v2.frame_claim}")
print(f"  predicted ({v2.predicted_lower:.6g}, {v2.predicted_upper:.6g}),"
      f" measured ({v2.measured_lower:.6g}, {v2.measured_upper:.6g}),"
      f" consistent={v2.consistent}")
print(f"  note: {v2.note}")

# an offset too large for the lower bound: the check degrades gracefully
# to "no guarantee" instead of claiming a frame
loose = Theorem1Params(0.0, 0.0, 1.1)
v3 = check_stability_t1(base, pert, loose)
print(f"\noversized mu=1.1: predicted_lower={v3.predicted_lower:.6g}, "
      f"frame_claim={v3.frame_claim}")
print(f"  note: {v3.note}")

# the same perturbation described without the offset term fails the
# hypothesis outright: 0.1-scaled members carry 10% of the energy
tight = Theorem1Params(0.05, 0.0, 0.0)
v4 = check_stability_t1(base, pert, tight)
print(f"\nundersized lambda1=0.05, mu=0: hypothesis_ok={v4.hypothesis_ok}")

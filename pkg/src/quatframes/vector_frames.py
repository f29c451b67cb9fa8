"""Classical frames of vectors in H^n.

A finite family {u_i} is a frame when

    r1 ||u||^2 <= sum_i |<u_i|u>|^2 <= r2 ||u||^2

for some 0 < r1 <= r2.  Synthesis applies right coefficients,
T({q_i}) = sum_i u_i q_i, analysis takes inner products against the
members, and the frame operator S = sum_i u_i <u_i|.|> is their
composition.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NotAFrame
from .linalg import (
    QMatrix,
    QVector,
    _conj4,
    _mul4,
    hermitian_eigenvalues,
    inner,
    inverse_matrix,
    outer,
)
from .quaternion import Quaternion
from .reporting import FRAME_TOL, FrameReport, build_report


class VectorFrame:
    """Finite ordered family of vectors in a common H^n."""

    __slots__ = ("space_dim", "members")

    def __init__(self, space_dim: int, members):
        members = list(members)
        for m in members:
            if m.dim != space_dim:
                raise DimensionMismatch(
                    f"member dim {m.dim} does not match space dim {space_dim}")
        self.space_dim = int(space_dim)
        self.members = members

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self):
        return f"VectorFrame(space_dim={self.space_dim}, members={len(self)})"


def synthesis(f: VectorFrame, coefficients) -> QVector:
    """sum_i u_i * q_i with the coefficients acting from the right."""
    coefficients = list(coefficients)
    if len(coefficients) != len(f.members):
        raise DimensionMismatch(
            f"{len(coefficients)} coefficients for {len(f.members)} members")
    out = np.zeros((f.space_dim, 4))
    for u, q in zip(f.members, coefficients):
        out += _mul4(u.data, np.array(q.components)[None, :])
    return QVector(out)


def analysis(f: VectorFrame, u: QVector) -> list[Quaternion]:
    """Coefficient list {<u_i|u>} in member order."""
    if u.dim != f.space_dim:
        raise DimensionMismatch(f"vector dim {u.dim} vs space dim {f.space_dim}")
    return [inner(m, u) for m in f.members]


def synthesis_matrix(f: VectorFrame) -> QMatrix:
    """Matrix whose columns are the members; synthesis is its action."""
    if not f.members:
        return QMatrix.zeros(f.space_dim, 0)
    return QMatrix.from_columns(f.members)


def frame_operator(f: VectorFrame) -> QMatrix:
    """S = sum_i u_i <u_i|.|>, accumulated in member order."""
    s = np.zeros((f.space_dim, f.space_dim, 4))
    for u in f.members:
        s += outer(u, u).data
    # the sum is self-adjoint in exact arithmetic; pin it down in floats
    s = (s + _conj4(np.swapaxes(s, 0, 1))) / 2.0
    return QMatrix(s)


def _reduced_operator(f: VectorFrame, skip: int) -> QMatrix:
    return frame_operator(VectorFrame(
        f.space_dim, [u for i, u in enumerate(f.members) if i != skip]))


def report(f: VectorFrame) -> FrameReport:
    """Optimal bounds (extremal eigenvalues of S) and classification."""
    return build_report(frame_operator(f), len(f.members),
                        removal_rank=lambda i: len(f.members) - 1,
                        reduced_operator=lambda i: _reduced_operator(f, i))


def canonical_dual(f: VectorFrame) -> VectorFrame:
    """The frame {S^-1 u_i}; raises NotAFrame when S is not invertible."""
    s = frame_operator(f)
    vals = hermitian_eigenvalues(s)
    if vals[0] <= FRAME_TOL:
        raise NotAFrame(f"smallest eigenvalue {vals[0]:.3e} of S is not positive")
    s_inv = inverse_matrix(s)
    return VectorFrame(f.space_dim, [s_inv @ u for u in f.members])

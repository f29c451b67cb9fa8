"""Frames of operators on H^n.

Members are left-acting matrices T_i: H^n -> H^{d_i} with possibly
different codomain dimensions.  The family is a frame of operators when

    r1 ||u||^2 <= sum_i ||T_i u||^2 <= r2 ||u||^2,

its frame operator is S = sum_i T_i* T_i, and the optimal bounds are the
extremal eigenvalues of S.  Every member T_i decomposes into the rows
x_k^i = T_i*(e_k^i); the flat list of those vectors is an ordinary vector
frame with the same frame operator and the same bounds, which is the
bridge used throughout this module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotAFrame
from .linalg import (
    QMatrix,
    QVector,
    _conj4,
    hermitian_eigenvalues,
    inverse_matrix,
    positive_sqrt,
)
from .reporting import FRAME_TOL, FrameReport, build_report
from .vector_frames import VectorFrame


class OperatorFrame:
    """Finite ordered family of operators with a common domain H^n."""

    __slots__ = ("space_dim", "members")

    def __init__(self, space_dim: int, members):
        members = list(members)
        for m in members:
            if m.cols != space_dim:
                raise DimensionMismatch(
                    f"member domain {m.cols} does not match space dim {space_dim}")
        self.space_dim = int(space_dim)
        self.members = members

    @property
    def codomain_dims(self) -> list[int]:
        return [m.rows for m in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self):
        return (f"OperatorFrame(space_dim={self.space_dim},"
                f" members={len(self)})")


class BlockVector:
    """Element of the direct sum of the codomains, one block per member."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        self.blocks = list(blocks)

    def norm_sq(self) -> float:
        return float(sum(b.norm_sq() for b in self.blocks))

    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq()))

    def __len__(self) -> int:
        return len(self.blocks)

    def __repr__(self):
        return f"BlockVector(blocks={[b.dim for b in self.blocks]})"


def op_frame_operator(f: OperatorFrame) -> QMatrix:
    """S = sum_i T_i* T_i, accumulated in member order."""
    s = np.zeros((f.space_dim, f.space_dim, 4))
    for t in f.members:
        s += (t.adjoint() @ t).data
    s = (s + _conj4(np.swapaxes(s, 0, 1))) / 2.0
    return QMatrix(s)


def _reduced_operator(f: OperatorFrame, skip: int) -> QMatrix:
    return op_frame_operator(OperatorFrame(
        f.space_dim, [t for i, t in enumerate(f.members) if i != skip]))


def op_report(f: OperatorFrame) -> FrameReport:
    """Optimal bounds and classification flags, as for vector frames."""
    dims = f.codomain_dims
    total = sum(dims)
    return build_report(op_frame_operator(f), len(f.members),
                        removal_rank=lambda i: total - dims[i],
                        reduced_operator=lambda i: _reduced_operator(f, i))


def op_analysis(f: OperatorFrame, u: QVector) -> BlockVector:
    """The tuple {T_i u}; its squared norm is the analysis energy of u."""
    if u.dim != f.space_dim:
        raise DimensionMismatch(f"vector dim {u.dim} vs space dim {f.space_dim}")
    return BlockVector([t @ u for t in f.members])


def op_synthesis(f: OperatorFrame, x: BlockVector) -> QVector:
    """sum_i T_i*(x_i), the adjoint of analysis."""
    if len(x.blocks) != len(f.members):
        raise DimensionMismatch(
            f"{len(x.blocks)} blocks for {len(f.members)} members")
    out = np.zeros((f.space_dim, 4))
    for t, b in zip(f.members, x.blocks):
        if b.dim != t.rows:
            raise DimensionMismatch(
                f"block dim {b.dim} vs codomain dim {t.rows}")
        out += (t.adjoint() @ b).data
    return QVector(out)


@dataclass(frozen=True)
class InducedSequence:
    """The row vectors of an operator frame, flattened in (member, basis
    index) order; together they form a vector frame with the same frame
    operator."""

    space_dim: int
    vectors: list[QVector]

    def to_vector_frame(self) -> VectorFrame:
        return VectorFrame(self.space_dim, self.vectors)


def induced_sequence(f: OperatorFrame) -> InducedSequence:
    """x_k^i = T_i*(e_k^i) for the standard basis of each codomain."""
    vectors = []
    for t in f.members:
        adj = t.adjoint()
        for k in range(t.rows):
            vectors.append(adj.column(k))
    return InducedSequence(f.space_dim, vectors)


def _invertible_frame_operator(f: OperatorFrame) -> QMatrix:
    s = op_frame_operator(f)
    vals = hermitian_eigenvalues(s)
    if vals[0] <= FRAME_TOL:
        raise NotAFrame(f"smallest eigenvalue {vals[0]:.3e} of S is not positive")
    return s


def op_dual(f: OperatorFrame) -> OperatorFrame:
    """Canonical dual {T_i S^-1}.

    Its bounds are the reciprocals of the original bounds in reverse
    order, its frame operator is S^-1, and pairing it with f reconstructs
    every vector.
    """
    s_inv = inverse_matrix(_invertible_frame_operator(f))
    return OperatorFrame(f.space_dim, [t @ s_inv for t in f.members])


def op_parseval(f: OperatorFrame) -> OperatorFrame:
    """Canonical Parseval normalization {T_i S^-1/2}.

    S^-1/2 is computed as the inverse of the positive square root; the
    resulting family has frame operator equal to the identity.
    """
    s = _invertible_frame_operator(f)
    root_inv = inverse_matrix(positive_sqrt(s))
    return OperatorFrame(f.space_dim, [t @ root_inv for t in f.members])


def reconstruct(f: OperatorFrame, g: OperatorFrame, u: QVector) -> QVector:
    """sum_i G_i* F_i(u); returns u itself when g is the canonical dual
    of f (and S u when g is f)."""
    if len(f.members) != len(g.members):
        raise DimensionMismatch(
            f"{len(f.members)} members vs {len(g.members)}")
    if f.space_dim != g.space_dim:
        raise DimensionMismatch(
            f"space dims {f.space_dim} and {g.space_dim}")
    for tf, tg in zip(f.members, g.members):
        if tf.rows != tg.rows:
            raise DimensionMismatch(
                f"codomain dims {tf.rows} and {tg.rows} differ")
    return op_synthesis(g, op_analysis(f, u))

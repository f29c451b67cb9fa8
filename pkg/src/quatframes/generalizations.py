"""Fusion frames, pseudo-frame pairs, and quasi-projector systems.

Each of these generalizes the frame inequality in a different direction:
fusion frames measure energy through weighted subspace projections,
pseudo-frame pairs reconstruct on a designated subspace through separate
analysis and synthesis families, and quasi-projector systems resolve the
identity by a sum of bounded self-adjoint operators.  All three embed
into frames of operators, which is how their bounds are computed here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    HypothesisViolated,
    InvalidWeight,
    NotAFrameOnSubspace,
)
from .linalg import (
    QMatrix,
    QVector,
    _conj4,
    _mul4,
    frobenius_distance,
    hermitian_eigenvalues,
    inner,
    orthonormalize,
    projection,
)
from .operator_frames import OperatorFrame, op_report
from .reporting import FRAME_TOL, FrameReport, build_report
from .sampling import random_quaternion

# residual tolerance for resolution-of-identity and compatibility checks
STRUCTURE_TOL = 1e-10
# reconstruction residual under which a pseudo-frame pair counts as working
PSEUDO_TOL = 1e-9


# ====== fusion frames ======

class FusionFrame:
    """Weighted family of subspaces W_i with weights v_i > 0.

    Subspace bases are orthonormalized on construction; the energy of u
    is sum_i v_i^2 ||P_{W_i} u||^2.
    """

    __slots__ = ("space_dim", "subspaces", "weights")

    def __init__(self, space_dim: int, subspaces, weights):
        subspaces = [list(basis) for basis in subspaces]
        weights = [float(w) for w in weights]
        if len(subspaces) != len(weights):
            raise DimensionMismatch(
                f"{len(subspaces)} subspaces vs {len(weights)} weights")
        for w in weights:
            if not w > 0.0:
                raise InvalidWeight(f"weight {w} is not strictly positive")
        for basis in subspaces:
            for v in basis:
                if v.dim != space_dim:
                    raise DimensionMismatch(
                        f"basis vector dim {v.dim} vs space dim {space_dim}")
        self.space_dim = int(space_dim)
        self.subspaces = [orthonormalize(basis) for basis in subspaces]
        self.weights = weights

    def __len__(self) -> int:
        return len(self.subspaces)

    def projections(self) -> list[QMatrix]:
        return [projection(basis) if basis else
                QMatrix.zeros(self.space_dim, self.space_dim)
                for basis in self.subspaces]

    def __repr__(self):
        return f"FusionFrame(space_dim={self.space_dim}, subspaces={len(self)})"


def fusion_frame_operator(f: FusionFrame) -> QMatrix:
    """sum_i v_i^2 P_{W_i}, accumulated in subspace order."""
    s = np.zeros((f.space_dim, f.space_dim, 4))
    for w, p in zip(f.weights, f.projections()):
        s += (w * w) * p.data
    s = (s + _conj4(np.swapaxes(s, 0, 1))) / 2.0
    return QMatrix(s)


def fusion_report(f: FusionFrame) -> FrameReport:
    """Bounds are the extremal eigenvalues of sum_i v_i^2 P_{W_i}."""
    dims = [len(basis) for basis in f.subspaces]
    total = sum(dims)

    def reduced(skip):
        keep = [i for i in range(len(f)) if i != skip]
        sub = FusionFrame(f.space_dim,
                          [f.subspaces[i] for i in keep],
                          [f.weights[i] for i in keep])
        return fusion_frame_operator(sub)

    return build_report(fusion_frame_operator(f), len(f),
                        removal_rank=lambda i: total - dims[i],
                        reduced_operator=reduced)


def fusion_to_op_frame(f: FusionFrame) -> OperatorFrame:
    """Encode each weighted subspace as the operator v_i P_{W_i}; the
    resulting frame of operators has the same energies and bounds."""
    return OperatorFrame(f.space_dim,
                         [p * w for w, p in zip(f.weights, f.projections())])


# ====== pseudo-frame pairs ======

class PseudoFramePair:
    """Analysis family {x_i}, synthesis family {x_i+}, and the subspace
    on which reconstruction x = sum_i x_i+ <x_i|x> is claimed."""

    __slots__ = ("space_dim", "analyzers", "synthesizers", "subspace")

    def __init__(self, space_dim: int, analyzers, synthesizers, subspace):
        analyzers = list(analyzers)
        synthesizers = list(synthesizers)
        if len(analyzers) != len(synthesizers):
            raise DimensionMismatch(
                f"{len(analyzers)} analyzers vs {len(synthesizers)} synthesizers")
        for v in (*analyzers, *synthesizers, *subspace):
            if v.dim != space_dim:
                raise DimensionMismatch(
                    f"vector dim {v.dim} vs space dim {space_dim}")
        self.space_dim = int(space_dim)
        self.analyzers = analyzers
        self.synthesizers = synthesizers
        self.subspace = orthonormalize(subspace)

    def __len__(self) -> int:
        return len(self.analyzers)

    def __repr__(self):
        return (f"PseudoFramePair(space_dim={self.space_dim},"
                f" members={len(self)}, subspace_dim={len(self.subspace)})")


@dataclass(frozen=True)
class PseudoCheck:
    holds: bool
    max_residual: float


def _pseudo_residual(pair: PseudoFramePair, x: QVector) -> float:
    acc = np.zeros((pair.space_dim, 4))
    for xa, xs in zip(pair.analyzers, pair.synthesizers):
        coeff = inner(xa, x)
        acc += _mul4(xs.data, np.array(coeff.components)[None, :])
    return float(np.linalg.norm(acc - x.data))


def pseudo_frame_check(pair: PseudoFramePair, samples: int = 50,
                       seed: int = 0) -> PseudoCheck:
    """Test the reconstruction identity on every basis vector of the
    subspace and on `samples` random right-quaternion combinations of
    them; holds iff the largest residual stays below PSEUDO_TOL."""
    rng = np.random.default_rng(seed)
    max_residual = 0.0
    for b in pair.subspace:
        max_residual = max(max_residual, _pseudo_residual(pair, b))
    basis = pair.subspace
    if basis:
        for _ in range(samples):
            acc = np.zeros((pair.space_dim, 4))
            for b in basis:
                q = random_quaternion(rng)
                acc += _mul4(b.data, np.array(q.components)[None, :])
            norm = np.linalg.norm(acc)
            if norm < 1e-12:
                continue
            x = QVector(acc / norm)
            max_residual = max(max_residual, _pseudo_residual(pair, x))
    return PseudoCheck(holds=max_residual <= PSEUDO_TOL,
                       max_residual=max_residual)


def pseudo_to_op_frame(pair: PseudoFramePair) -> OperatorFrame:
    """Restrict the analyzers to the subspace, written in its
    orthonormal basis, giving one 1 x dim(subspace) functional each.

    Raises NotAFrameOnSubspace when the restricted analyzers fail the
    frame inequality on the subspace.
    """
    basis = pair.subspace
    s = len(basis)
    if s == 0:
        raise NotAFrameOnSubspace("subspace is trivial")
    members = []
    for xa in pair.analyzers:
        # on coordinates c against the basis, <x_a|sum_k b_k c_k> is the
        # row of entries <x_a|b_k> acting from the left
        row = np.stack([inner(xa, b).components for b in basis], axis=0)
        members.append(QMatrix(row[None, :, :]))
    frame = OperatorFrame(s, members)
    if not op_report(frame).is_frame:
        raise NotAFrameOnSubspace(
            "restricted analyzers fail the frame inequality on the subspace")
    return frame


# ====== quasi-projector systems ======

class QuasiProjectorSystem:
    """Family {P_j} meant to resolve the identity, sum_j P_j = I, with a
    finite Bessel-type energy bound.

    `decomposition`, when given, is a pair (d_ops, w0_basis): bounded
    operators D_j and a base subspace with W_j = D_j(W_0); compatibility
    is then checked against those subspaces instead of range(P_j).
    """

    __slots__ = ("space_dim", "projectors", "decomposition")

    def __init__(self, space_dim: int, projectors, decomposition=None):
        projectors = list(projectors)
        for p in projectors:
            if p.shape != (space_dim, space_dim):
                raise DimensionMismatch(
                    f"projector shape {p.shape} vs space dim {space_dim}")
        if decomposition is not None:
            d_ops, w0 = decomposition
            d_ops = list(d_ops)
            w0 = list(w0)
            if len(d_ops) != len(projectors):
                raise DimensionMismatch(
                    f"{len(d_ops)} displacement operators vs"
                    f" {len(projectors)} projectors")
            decomposition = (d_ops, w0)
        self.space_dim = int(space_dim)
        self.projectors = projectors
        self.decomposition = decomposition

    def __len__(self) -> int:
        return len(self.projectors)

    def __repr__(self):
        return (f"QuasiProjectorSystem(space_dim={self.space_dim},"
                f" projectors={len(self)})")


@dataclass(frozen=True)
class QuasiCheck:
    resolution_ok: bool
    bessel_bound: float
    self_adjoint: bool
    compatible: bool


def _range_basis(p: QMatrix) -> list[QVector]:
    return orthonormalize([p.column(c) for c in range(p.cols)])


def quasi_projector_check(system: QuasiProjectorSystem) -> QuasiCheck:
    """Diagnose the three structural properties of the system.

    resolution_ok: sum_j P_j is the identity to STRUCTURE_TOL.
    bessel_bound:  largest eigenvalue of sum_j P_j* P_j.
    self_adjoint:  every P_j equals its adjoint to STRUCTURE_TOL.
    compatible:    P_j acts through its own subspace, P_j pi_{W_j} = P_j.
    """
    n = system.space_dim
    total = np.zeros((n, n, 4))
    gram = np.zeros((n, n, 4))
    self_adjoint = True
    for p in system.projectors:
        total += p.data
        gram += (p.adjoint() @ p).data
        scale = max(1.0, p.frobenius())
        if frobenius_distance(p, p.adjoint()) > STRUCTURE_TOL * scale:
            self_adjoint = False
    resolution_ok = (frobenius_distance(QMatrix(total), QMatrix.identity(n))
                     <= STRUCTURE_TOL)
    gram = (gram + _conj4(np.swapaxes(gram, 0, 1))) / 2.0
    bessel_bound = float(hermitian_eigenvalues(QMatrix(gram))[-1])
    compatible = True
    for j, p in enumerate(system.projectors):
        if system.decomposition is not None:
            d_ops, w0 = system.decomposition
            basis = orthonormalize([d_ops[j] @ w for w in w0])
        else:
            basis = _range_basis(p)
        pi = (projection(basis) if basis
              else QMatrix.zeros(n, n))
        scale = max(1.0, p.frobenius())
        if frobenius_distance(p @ pi, p) > STRUCTURE_TOL * scale:
            compatible = False
    return QuasiCheck(resolution_ok=resolution_ok, bessel_bound=bessel_bound,
                      self_adjoint=self_adjoint, compatible=compatible)


def quasi_to_op_frame(system: QuasiProjectorSystem) -> OperatorFrame:
    """Use the members P_j themselves as a frame of operators.

    Requires the system to be self-adjoint and to resolve the identity;
    otherwise HypothesisViolated is raised.
    """
    check = quasi_projector_check(system)
    if not check.self_adjoint:
        raise HypothesisViolated("projectors are not all self-adjoint")
    if not check.resolution_ok:
        raise HypothesisViolated("projectors do not sum to the identity")
    return OperatorFrame(system.space_dim, list(system.projectors))

"""Seeded random generation of quaternionic objects.

Every function takes an explicit numpy Generator so that callers stay
reproducible; nothing here touches global random state.
"""

from __future__ import annotations

import numpy as np

from .linalg import QMatrix, QVector
from .operator_frames import BlockVector, OperatorFrame
from .quaternion import Quaternion


def random_quaternion(rng: np.random.Generator, scale: float = 1.0) -> Quaternion:
    return Quaternion.from_components(rng.standard_normal(4) * scale)


def random_qvector(rng: np.random.Generator, dim: int, scale: float = 1.0) -> QVector:
    return QVector(rng.standard_normal((dim, 4)) * scale)


def random_unit_qvector(rng: np.random.Generator, dim: int) -> QVector:
    while True:
        data = rng.standard_normal((dim, 4))
        norm = np.linalg.norm(data)
        if norm > 1e-6:
            return QVector(data / norm)


def random_qmatrix(rng: np.random.Generator, rows: int, cols: int,
                   scale: float = 1.0) -> QMatrix:
    return QMatrix(rng.standard_normal((rows, cols, 4)) * scale)


def random_operator_frame(rng: np.random.Generator, dim: int,
                          codomain_dims, scale: float = 1.0) -> OperatorFrame:
    return OperatorFrame(dim, [random_qmatrix(rng, d, dim, scale)
                               for d in codomain_dims])


def random_block_vector(rng: np.random.Generator, dims) -> BlockVector:
    return BlockVector([random_qvector(rng, d) for d in dims])


def random_unit_block_vector(rng: np.random.Generator, dims) -> BlockVector:
    blocks = [rng.standard_normal((d, 4)) for d in dims]
    norm = np.sqrt(sum(float(np.sum(b * b)) for b in blocks))
    if norm < 1e-6:
        return random_unit_block_vector(rng, dims)
    return BlockVector([QVector(b / norm) for b in blocks])

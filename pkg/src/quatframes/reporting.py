"""Frame classification shared by vector frames, frames of operators,
and fusion frames.

A family with frame operator S satisfies

    r1 ||u||^2 <= (analysis energy of u) <= r2 ||u||^2

with optimal bounds given by the extremal eigenvalues of S.  Finite
families always satisfy the upper inequality, so is_bessel is true by
construction; the other flags are decided numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .linalg import QMatrix, hermitian_eigenvalues

# a family is a frame when the smallest eigenvalue of S clears this
FRAME_TOL = 1e-10
# relative spread under which the two bounds count as equal
TIGHT_RTOL = 1e-9


@dataclass(frozen=True)
class FrameReport:
    """Optimal bounds and classification flags for one family."""

    lower: float
    upper: float
    is_bessel: bool
    is_frame: bool
    is_tight: bool
    is_parseval: bool
    is_exact: bool
    frame_operator: QMatrix


def build_report(s: QMatrix,
                 member_count: int,
                 removal_rank: Callable[[int], int],
                 reduced_operator: Callable[[int], QMatrix]) -> FrameReport:
    """Classify a family from its frame operator.

    removal_rank(i) bounds the achievable rank once member i is removed
    (a cheap filter: below the space dimension the reduced family cannot
    be a frame); reduced_operator(i) is the frame operator without
    member i.  Exactness means every single removal destroys the frame
    property.
    """
    vals = hermitian_eigenvalues(s)
    lower = float(vals[0])
    upper = float(vals[-1])
    is_frame = lower > FRAME_TOL
    is_tight = is_frame and abs(upper - lower) <= TIGHT_RTOL * upper
    is_parseval = is_tight and abs(lower - 1.0) <= TIGHT_RTOL
    is_exact = is_frame and member_count > 0
    if is_exact:
        for i in range(member_count):
            if removal_rank(i) < s.rows:
                continue
            reduced = hermitian_eigenvalues(reduced_operator(i))
            if reduced[0] > FRAME_TOL:
                # member i is redundant, the family is overcomplete
                is_exact = False
                break
    return FrameReport(lower=lower, upper=upper, is_bessel=True,
                       is_frame=is_frame, is_tight=is_tight,
                       is_parseval=is_parseval, is_exact=is_exact,
                       frame_operator=s)

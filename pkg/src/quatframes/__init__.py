"""Frames and frames of operators over finite-dimensional right
quaternionic Hilbert spaces, with perturbation-stability checks and a
file-driven command line front end."""

__version__ = "0.1.0"

from .quaternion import Quaternion
from .linalg import (
    QMatrix,
    QVector,
    Spectrum,
    complex_adjoint_rep,
    hermitian_eigenvalues,
    hermitian_spectrum,
    inner,
    inverse_matrix,
    orthonormalize,
    outer,
    positive_sqrt,
    projection,
    solve,
)
from .reporting import FrameReport
from .vector_frames import (
    VectorFrame,
    analysis,
    canonical_dual,
    frame_operator,
    report,
    synthesis,
    synthesis_matrix,
)
from .operator_frames import (
    BlockVector,
    InducedSequence,
    OperatorFrame,
    induced_sequence,
    op_analysis,
    op_dual,
    op_frame_operator,
    op_parseval,
    op_report,
    op_synthesis,
    reconstruct,
)
from .generalizations import (
    FusionFrame,
    PseudoCheck,
    PseudoFramePair,
    QuasiCheck,
    QuasiProjectorSystem,
    fusion_frame_operator,
    fusion_report,
    fusion_to_op_frame,
    pseudo_frame_check,
    pseudo_to_op_frame,
    quasi_projector_check,
    quasi_to_op_frame,
)
from .stability import (
    StabilityVerdict,
    Theorem1Params,
    Theorem2Params,
    check_stability_t1,
    check_stability_t2,
    difference_frame,
    fit_params_t1,
    fit_params_t2,
)

__all__ = [
    "__version__",
    "Quaternion",
    "QVector",
    "QMatrix",
    "Spectrum",
    "inner",
    "outer",
    "solve",
    "inverse_matrix",
    "complex_adjoint_rep",
    "hermitian_eigenvalues",
    "hermitian_spectrum",
    "positive_sqrt",
    "orthonormalize",
    "projection",
    "FrameReport",
    "VectorFrame",
    "analysis",
    "synthesis",
    "synthesis_matrix",
    "frame_operator",
    "report",
    "canonical_dual",
    "BlockVector",
    "InducedSequence",
    "OperatorFrame",
    "induced_sequence",
    "op_analysis",
    "op_synthesis",
    "op_frame_operator",
    "op_report",
    "op_dual",
    "op_parseval",
    "reconstruct",
    "FusionFrame",
    "PseudoFramePair",
    "PseudoCheck",
    "QuasiProjectorSystem",
    "QuasiCheck",
    "fusion_frame_operator",
    "fusion_report",
    "fusion_to_op_frame",
    "pseudo_frame_check",
    "pseudo_to_op_frame",
    "quasi_projector_check",
    "quasi_to_op_frame",
    "StabilityVerdict",
    "Theorem1Params",
    "Theorem2Params",
    "difference_frame",
    "fit_params_t1",
    "fit_params_t2",
    "check_stability_t1",
    "check_stability_t2",
]

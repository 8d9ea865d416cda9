"""Polarization-coherence complementarity toolkit.

Computes Stokes parameters of 2x2 and 3x3 polarization-coherence
matrices, the scalar measures built on them (generalized
predictability, Hilbert-Schmidt coherence, degree of polarization,
concurrence / I-concurrence, linear entropy), and certifies the
duality/triality identities tying them together, both on single states
and over seeded sampling campaigns.
"""

from .basis import (
    GeneratorSet,
    PurityResiduals,
    StokesVector,
    StructureConstants,
    generators,
    pure_state_constraints,
    stokes_extract,
    stokes_from_json,
    stokes_reconstruct,
    stokes_to_json,
    structure_constants,
)
from .errors import (
    DegenerateInput,
    DimensionError,
    PolcoError,
    PreconditionError,
    UnknownRelation,
    UnknownState,
    UnsupportedDimension,
    ValidationError,
)
from .linalg import (
    StateVector,
    ValidationReport,
    as_complex_matrix,
    fingerprint,
    gram_matrix,
    matrix_from_json,
    matrix_to_json,
    partial_trace,
    slice_vectors,
    state_from_json,
    state_to_json,
    tensor,
    validate_density,
    wedge_norm_sq,
)
from .measures import (
    MeasureReport,
    coherence_hs_sq,
    concurrence_2x2,
    degree_pol_sq,
    i_concurrence_sq,
    linear_entropy_sq,
    measure_report,
    predictability_sq,
    report_to_json,
)
from .relations import (
    CampaignSummary,
    RelationVerdict,
    check_duality_pure,
    check_mixed_triality,
    check_pct,
    check_pure_stokes_geometry,
    check_qubit_triality_pure,
    check_qutrit_triality_pure,
    relation_ids,
    run_campaign,
    summary_to_json,
    verdict_to_json,
)
from .states import (
    BeamSpec,
    beam_to_state,
    haar_pure,
    haar_unitary,
    named_state,
    named_state_names,
    random_mixed,
)
from .tolerances import TAU_HERM, TAU_NORM, TAU_NUM, TAU_PSD, TAU_REL

__version__ = "0.1.0"

__all__ = [
    "BeamSpec",
    "CampaignSummary",
    "DegenerateInput",
    "DimensionError",
    "GeneratorSet",
    "MeasureReport",
    "PolcoError",
    "PreconditionError",
    "PurityResiduals",
    "RelationVerdict",
    "StateVector",
    "StokesVector",
    "StructureConstants",
    "TAU_HERM",
    "TAU_NORM",
    "TAU_NUM",
    "TAU_PSD",
    "TAU_REL",
    "UnknownRelation",
    "UnknownState",
    "UnsupportedDimension",
    "ValidationError",
    "ValidationReport",
    "as_complex_matrix",
    "beam_to_state",
    "check_duality_pure",
    "check_mixed_triality",
    "check_pct",
    "check_pure_stokes_geometry",
    "check_qubit_triality_pure",
    "check_qutrit_triality_pure",
    "coherence_hs_sq",
    "concurrence_2x2",
    "degree_pol_sq",
    "fingerprint",
    "generators",
    "gram_matrix",
    "haar_pure",
    "haar_unitary",
    "i_concurrence_sq",
    "linear_entropy_sq",
    "matrix_from_json",
    "matrix_to_json",
    "measure_report",
    "named_state",
    "named_state_names",
    "partial_trace",
    "predictability_sq",
    "pure_state_constraints",
    "random_mixed",
    "relation_ids",
    "report_to_json",
    "run_campaign",
    "slice_vectors",
    "state_from_json",
    "state_to_json",
    "stokes_extract",
    "stokes_from_json",
    "stokes_reconstruct",
    "stokes_to_json",
    "structure_constants",
    "summary_to_json",
    "tensor",
    "validate_density",
    "verdict_to_json",
    "wedge_norm_sq",
]

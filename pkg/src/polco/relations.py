"""Verification engine for the complementarity identities.

Each ``check_*`` returns a :class:`RelationVerdict`; campaigns sample
seeded random inputs and aggregate verdicts without ever raising on an
individual failure.  For single-clause relations the residual is
|lhs - rhs|; the two pure-triality checks also verify their companion
clauses (the mixedness form and the entanglement-mixedness agreement)
and report the worst clause residual, so ``passed`` covers all of them.

For mixed bipartite parents the concurrence-form triality is only an
inequality and is deliberately not checked as an identity; the
mixedness form (``check_mixed_triality``) is the equality that holds
there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import pure_state_constraints, stokes_extract
from .errors import (
    DimensionError,
    PreconditionError,
    UnknownRelation,
    UnsupportedDimension,
)
from .linalg import StateVector, fingerprint, partial_trace
from .measures import (
    coherence_hs_sq,
    concurrence_2x2,
    degree_pol_sq,
    i_concurrence_sq,
    linear_entropy_sq,
    predictability_sq,
)
from .states import haar_pure, random_mixed
from .tolerances import TAU_REL

FOUR_THIRDS = 4.0 / 3.0


@dataclass(frozen=True)
class RelationVerdict:
    """One relation evaluated on one input.

    ``residual`` is |lhs - rhs| for single-clause relations and the
    maximum clause residual for composite ones; ``passed`` is always
    ``residual <= tolerance``.
    """

    relation_id: str
    lhs: float
    rhs: float
    residual: float
    tolerance: float
    passed: bool
    state_ref: str


@dataclass(frozen=True)
class CampaignSummary:
    """Aggregate of one relation over a seeded sample stream."""

    relation_id: str
    n_samples: int
    max_residual: float
    mean_residual: float
    failures: int
    seed: int
    tolerance: float


def _verdict(relation_id, lhs, rhs, tolerance, state_ref, extra=()) -> RelationVerdict:
    residual = abs(lhs - rhs)
    for clause_residual in extra:
        residual = max(residual, clause_residual)
    return RelationVerdict(
        relation_id=relation_id,
        lhs=float(lhs),
        rhs=float(rhs),
        residual=float(residual),
        tolerance=float(tolerance),
        passed=residual <= tolerance,
        state_ref=state_ref,
    )


def _require_state(state, context: str) -> None:
    if not isinstance(state, StateVector):
        raise PreconditionError(
            f"{context} takes a pure state vector; for density matrices use check_mixed_triality"
        )


def check_duality_pure(state: StateVector, tol: float = TAU_REL) -> RelationVerdict:
    """P^2 + C^2 = 1 (qubit) or 4/3 (qutrit) for pure single systems."""
    _require_state(state, "check_duality_pure")
    if state.split is not None:
        raise PreconditionError("expected a single-system state, got a bipartite split")
    if state.dim not in (2, 3):
        raise UnsupportedDimension(f"duality is defined for dims 2 and 3, got {state.dim}")
    rho = state.density()
    lhs = predictability_sq(rho) + coherence_hs_sq(rho)
    rhs = 1.0 if state.dim == 2 else FOUR_THIRDS
    relation_id = "qubit-duality" if state.dim == 2 else "qutrit-duality"
    return _verdict(relation_id, lhs, rhs, tol, fingerprint(state))


def check_pct(phi, tol: float = TAU_REL) -> RelationVerdict:
    """Polarization-coherence theorem: |S|^2 = P^2 + C^2 for any 2x2 density."""
    lhs = degree_pol_sq(phi)
    rhs = predictability_sq(phi) + coherence_hs_sq(phi)
    return _verdict("pct", lhs, rhs, tol, fingerprint(phi))


def check_qubit_triality_pure(
    state: StateVector, tol: float = TAU_REL, subsystem: str = "A"
) -> RelationVerdict:
    """E^2 + P^2 + C^2 = 1 for pure two-qubit states.

    Also verifies the mixedness form M^2 + C^2 + P^2 = 1 on the reduced
    state and the agreement E^2 = M^2; the verdict reflects the worst of
    the three clauses.
    """
    _require_state(state, "check_qubit_triality_pure")
    if state.split != (2, 2):
        raise DimensionError(f"expected split (2, 2), got {state.split}")
    rho = partial_trace(state.density(), 2, 2, keep=subsystem)
    ent_sq = concurrence_2x2(state) ** 2
    pred = predictability_sq(rho)
    coh = coherence_hs_sq(rho)
    mix = linear_entropy_sq(rho)
    lhs = ent_sq + pred + coh
    extra = (abs(mix + coh + pred - 1.0), abs(ent_sq - mix))
    return _verdict("qubit-triality", lhs, 1.0, tol, fingerprint(state), extra)


def check_qutrit_triality_pure(
    state: StateVector, tol: float = TAU_REL, subsystem: str = "A"
) -> RelationVerdict:
    """E^2 + C^2 + P^2 = 4/3 for pure two-qutrit states.

    Also verifies E^2 = (4/3) M^2 on the reduced state; the verdict
    reflects the worse of the two clauses.
    """
    _require_state(state, "check_qutrit_triality_pure")
    if state.split != (3, 3):
        raise DimensionError(f"expected split (3, 3), got {state.split}")
    if subsystem == "B":
        # wedge sums are subsystem-symmetric, so reuse the A-slice path
        # on the transposed amplitude table
        table = state.amplitudes.reshape(3, 3).T.copy()
        state_for_ent = StateVector(table.reshape(-1), split=(3, 3))
    else:
        state_for_ent = state
    rho = partial_trace(state.density(), 3, 3, keep=subsystem)
    ent_sq = i_concurrence_sq(state_for_ent)
    pred = predictability_sq(rho)
    coh = coherence_hs_sq(rho)
    mix = linear_entropy_sq(rho)
    lhs = ent_sq + coh + pred
    extra = (abs(ent_sq - FOUR_THIRDS * mix),)
    return _verdict("qutrit-triality", lhs, FOUR_THIRDS, tol, fingerprint(state), extra)


def check_mixed_triality(rho, tol: float = TAU_REL) -> RelationVerdict:
    """Mixedness triality for any single-system density matrix.

    dim 2: M^2 + C^2 + P^2 = 1; dim 3: (4/3) M^2 + P^2 + C^2 = 4/3.
    """
    pred = predictability_sq(rho)
    coh = coherence_hs_sq(rho)
    mix = linear_entropy_sq(rho)
    n = np.asarray(rho).shape[0]
    if n == 2:
        return _verdict("qubit-mixed-triality", mix + coh + pred, 1.0, tol, fingerprint(rho))
    return _verdict(
        "qutrit-mixed-triality", FOUR_THIRDS * mix + pred + coh, FOUR_THIRDS, tol, fingerprint(rho)
    )


def check_pure_stokes_geometry(state: StateVector, tol: float = TAU_REL) -> RelationVerdict:
    """Pure-state constraints on the SU(3) Stokes vector of |psi><psi|.

    The verdict's lhs is the worse of the norm and quadratic residuals
    (rhs 0), so it measures distance from the admissible surface.
    """
    _require_state(state, "check_pure_stokes_geometry")
    if state.split is not None or state.dim != 3:
        raise DimensionError("expected a single-system qutrit state")
    residuals = pure_state_constraints(stokes_extract(state.density()))
    worst = max(residuals.norm_residual, residuals.dijk_residual)
    return _verdict("stokes-geometry", worst, 0.0, tol, fingerprint(state))


# ---------------------------------------------------------------------------
# Sampling campaigns
# ---------------------------------------------------------------------------

def _sample_pure(dim, split=None):
    def sample(rng, index, params):
        return haar_pure(dim, rng, split=split)

    return sample


def _sample_mixed(dim):
    def sample(rng, index, params):
        rank = params.get("rank") or (index % dim) + 1  # cycle ranks by default
        return random_mixed(dim, rank, rng)

    return sample


_RELATIONS = {
    "qubit-duality": (check_duality_pure, _sample_pure(2)),
    "qutrit-duality": (check_duality_pure, _sample_pure(3)),
    "pct": (check_pct, _sample_mixed(2)),
    "qubit-triality": (check_qubit_triality_pure, _sample_pure(4, split=(2, 2))),
    "qutrit-triality": (check_qutrit_triality_pure, _sample_pure(9, split=(3, 3))),
    "qubit-mixed-triality": (check_mixed_triality, _sample_mixed(2)),
    "qutrit-mixed-triality": (check_mixed_triality, _sample_mixed(3)),
    "stokes-geometry": (check_pure_stokes_geometry, _sample_pure(3)),
}


def relation_ids() -> tuple[str, ...]:
    return tuple(_RELATIONS)


def run_campaign(
    relation_id: str, n: int, seed: int, params: dict | None = None, tol: float = TAU_REL
) -> CampaignSummary:
    """Evaluate one relation over ``n`` seeded random samples.

    Per-sample streams are spawned from the seed before evaluation, so
    the aggregation (max / mean / failure count) does not depend on
    evaluation order.  Failing verdicts are counted, never raised.
    """
    if relation_id not in _RELATIONS:
        known = ", ".join(_RELATIONS)
        raise UnknownRelation(f"unknown relation {relation_id!r}; known: {known}")
    if n < 1:
        raise PreconditionError(f"campaign needs n >= 1, got {n}")
    params = dict(params or {})
    checker, sampler = _RELATIONS[relation_id]
    streams = np.random.SeedSequence(seed).spawn(n)
    residuals = np.empty(n)
    failures = 0
    for index, stream in enumerate(streams):
        rng = np.random.default_rng(stream)
        verdict = checker(sampler(rng, index, params), tol=tol)
        residuals[index] = verdict.residual
        if not verdict.passed:
            failures += 1
    return CampaignSummary(
        relation_id=relation_id,
        n_samples=n,
        max_residual=float(residuals.max()),
        mean_residual=float(residuals.mean()),
        failures=failures,
        seed=int(seed),
        tolerance=float(tol),
    )


def verdict_to_json(v: RelationVerdict) -> dict:
    return {
        "relation_id": v.relation_id,
        "lhs": v.lhs,
        "rhs": v.rhs,
        "residual": v.residual,
        "tolerance": v.tolerance,
        "pass": v.passed,
        "state_ref": v.state_ref,
    }


def summary_to_json(s: CampaignSummary) -> dict:
    return {
        "relation_id": s.relation_id,
        "n_samples": s.n_samples,
        "max_residual": s.max_residual,
        "mean_residual": s.mean_residual,
        "failures": s.failures,
        "seed": s.seed,
        "tolerance": s.tolerance,
    }

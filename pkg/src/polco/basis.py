"""Traceless Hermitian generator sets and Stokes-vector algebra.

Both supported bases are normalized to Tr(g_i g_j) = 2 delta_ij.  A
unit-trace 2x2 matrix expands as Phi = (I + sum_i S_i sigma_i)/2 with
S_i = Tr(Phi sigma_i); a unit-trace 3x3 matrix expands as
Phi = (I + sqrt(3) sum_i S_i g_i)/3 with S_i = sqrt(3) Tr(g_i Phi)/2.
The two imaginary off-diagonal SU(3) generators carry -i above the
diagonal and +i below, keeping every generator Hermitian.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import DimensionError, UnsupportedDimension, ValidationError
from .linalg import as_complex_matrix
from .tolerances import TAU_HERM, TAU_NORM, TAU_NUM

_SQRT3 = np.sqrt(3.0)


def _frozen(rows) -> np.ndarray:
    m = np.array(rows, dtype=np.complex128)
    m.flags.writeable = False
    return m


_PAULI = (
    _frozen([[0, 1], [1, 0]]),
    _frozen([[0, -1j], [1j, 0]]),
    _frozen([[1, 0], [0, -1]]),
)

_SU3 = (
    _frozen([[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
    _frozen([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]]),
    _frozen([[1, 0, 0], [0, -1, 0], [0, 0, 0]]),
    _frozen([[0, 0, 1], [0, 0, 0], [1, 0, 0]]),
    _frozen([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]]),
    _frozen([[0, 0, 0], [0, 0, 1], [0, 1, 0]]),
    _frozen([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]]),
    _frozen(np.diag([1, 1, -2]) / _SQRT3),
)


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    """Ordered generator basis for one dimension.

    Every member is Hermitian and traceless with Tr(g_i g_j) = 2 delta_ij.
    """

    dim: int
    matrices: tuple[np.ndarray, ...]

    def __len__(self) -> int:
        return len(self.matrices)

    def __iter__(self):
        return iter(self.matrices)

    def __getitem__(self, index: int) -> np.ndarray:
        return self.matrices[index]

    def stacked(self) -> np.ndarray:
        """All generators as one (n^2 - 1, n, n) array."""
        return np.stack(self.matrices)


@lru_cache(maxsize=None)
def generators(n: int) -> GeneratorSet:
    """The Pauli set (n=2) or SU(3) Gell-Mann set (n=3), standard order."""
    if n == 2:
        return GeneratorSet(2, _PAULI)
    if n == 3:
        return GeneratorSet(3, _SU3)
    raise UnsupportedDimension(f"generator sets exist for n in {{2, 3}}, got {n}")


@dataclass(frozen=True, eq=False)
class StokesVector:
    """Real expansion coefficients of a unit-trace Hermitian matrix.

    ``n`` is the matrix dimension (2 or 3); ``components`` has length
    n^2 - 1.  The array is copied and frozen at construction.
    """

    n: int
    components: np.ndarray

    def __post_init__(self):
        if self.n not in (2, 3):
            raise UnsupportedDimension(f"Stokes vectors exist for n in {{2, 3}}, got {self.n}")
        comp = np.array(self.components, dtype=np.float64)
        if comp.shape != (self.n * self.n - 1,):
            raise DimensionError(
                f"need {self.n * self.n - 1} components for n={self.n}, got shape {comp.shape}"
            )
        if not np.all(np.isfinite(comp)):
            raise ValidationError("Stokes components must be finite")
        comp.flags.writeable = False
        object.__setattr__(self, "components", comp)

    def norm_sq(self) -> float:
        """Squared Euclidean length of the component vector."""
        return float(self.components @ self.components)


class StructureConstants(NamedTuple):
    """Symmetric (d) and antisymmetric (f) SU(3) structure tensors."""

    d: np.ndarray
    f: np.ndarray


@lru_cache(maxsize=1)
def structure_constants() -> StructureConstants:
    """SU(3) structure constants from generator traces.

    d_ijk = Tr({g_i, g_j} g_k) / 4 and f_ijk = Tr([g_i, g_j] g_k) / (4i),
    computed from the generator set itself rather than transcribed from
    tables.  Both tensors are verified real before the imaginary parts
    are discarded, then cached immutably.
    """
    lam = generators(3).stacked()
    triple = np.einsum("aij,bjk,cki->abc", lam, lam, lam)  # Tr(g_a g_b g_c)
    swapped = triple.transpose(1, 0, 2)
    d = (triple + swapped) / 4.0
    f = (triple - swapped) / 4.0j
    for name, tensor_ in (("d", d), ("f", f)):
        residue = float(np.abs(tensor_.imag).max())
        if residue > TAU_NUM:
            raise ValidationError(f"{name}_ijk has imaginary residue {residue:.3e}")
    d = d.real.copy()
    f = f.real.copy()
    d.flags.writeable = False
    f.flags.writeable = False
    return StructureConstants(d=d, f=f)


def stokes_extract(phi) -> StokesVector:
    """Stokes components of a Hermitian 2x2 or 3x3 matrix.

    Input is trace-normalized first, so the overall intensity Tr(phi)
    stays with the caller as metadata.  Positivity is not required.
    """
    phi = as_complex_matrix(phi)
    n = phi.shape[0]
    if n not in (2, 3):
        raise UnsupportedDimension(f"Stokes extraction exists for dims 2 and 3, got {n}")
    defect = float(np.abs(phi - phi.conj().T).max())
    if defect > TAU_HERM:
        raise ValidationError(f"matrix is not Hermitian: max defect {defect:.3e}")
    trace = complex(np.trace(phi))
    if abs(trace) <= TAU_NORM:
        raise ValidationError("matrix trace is ~0; cannot trace-normalize")
    if abs(trace - 1.0) > TAU_NORM:
        phi = phi / trace
    lam = generators(n).stacked()
    raw = np.einsum("kij,ji->k", lam, phi)  # Tr(g_k phi) for each k
    scale = 1.0 if n == 2 else _SQRT3 / 2.0
    return StokesVector(n, scale * raw.real)


def stokes_reconstruct(s: StokesVector) -> np.ndarray:
    """Hermitian unit-trace matrix with the given Stokes components.

    Exact inverse of :func:`stokes_extract` on unit-trace input.  The
    result need not be positive semi-definite; validate before using it
    as a density matrix.
    """
    lam = generators(s.n).stacked()
    weighted = np.einsum("k,kij->ij", s.components, lam)
    if s.n == 2:
        return (np.eye(2) + weighted) / 2.0
    return (np.eye(3) + _SQRT3 * weighted) / 3.0


class PurityResiduals(NamedTuple):
    """Residuals of the two pure-state conditions on an SU(3) Stokes vector."""

    norm_residual: float
    dijk_residual: float


def pure_state_constraints(s: StokesVector) -> PurityResiduals:
    """How far an SU(3) Stokes vector is from describing a pure state.

    A unit-trace Hermitian 3x3 matrix is a rank-1 projector exactly when
    sum_i S_i^2 = 1 and sqrt(3) sum_ij d_ijk S_i S_j = S_k for every k.
    Returns |sum_i S_i^2 - 1| and the max-abs residual of the quadratic
    condition.
    """
    if s.n != 3:
        raise UnsupportedDimension(f"pure-state constraints apply to n=3, got n={s.n}")
    comps = s.components
    norm_residual = abs(float(comps @ comps) - 1.0)
    d = structure_constants().d
    quadratic = _SQRT3 * np.einsum("ijk,i,j->k", d, comps, comps)
    dijk_residual = float(np.abs(quadratic - comps).max())
    return PurityResiduals(norm_residual, dijk_residual)


def stokes_to_json(s: StokesVector) -> dict:
    return {"n": s.n, "s": s.components.tolist()}


def stokes_from_json(doc: dict) -> StokesVector:
    return StokesVector(int(doc["n"]), np.asarray(doc["s"], dtype=np.float64))

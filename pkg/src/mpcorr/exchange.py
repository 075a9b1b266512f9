"""Two-qubit exchange symmetry: the symmetrizing/antisymmetrizing projectors
(1 +- P_AB)/2 and projections of states onto the triplet/singlet sectors.

The antisymmetric sector of two qubits is one-dimensional, so any state's
antisymmetric projection renormalizes to the pure singlet; the symmetric
projection can stay mixed.
"""

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .density import DensityMatrix, HermitianOperator

NULL_PROJECTION_TOL = 1e-12

_SWAP = np.array(
    [[1, 0, 0, 0],
     [0, 0, 1, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 1]], dtype=complex)

ExchangeKind = Literal["symmetric", "antisymmetric"]


class NullProjectionError(ValueError):
    """The state has (numerically) no weight in the requested sector."""


@dataclass(frozen=True)
class ExchangeProjection:
    """Renormalized projection of a state onto one exchange sector, together
    with the sector weight Tr(P rho P).  Weights of the two sectors sum
    to 1."""

    kind: ExchangeKind
    projected: DensityMatrix
    weight: float


def symmetrizer_two_qubit() -> HermitianOperator:
    """Projector (1 + P_AB)/2 onto the triplet (exchange-symmetric) sector."""
    return HermitianOperator((2, 2), (np.eye(4) + _SWAP) / 2.0)


def antisymmetrizer_two_qubit() -> HermitianOperator:
    """Projector (1 - P_AB)/2 onto the singlet (exchange-antisymmetric)
    sector; equals |psi-><psi-|."""
    return HermitianOperator((2, 2), (np.eye(4) - _SWAP) / 2.0)


def project_exchange(rho: DensityMatrix, kind: ExchangeKind) -> ExchangeProjection:
    """P rho P restricted to one exchange sector, renormalized.

    Raises NullProjectionError when the sector weight is below 1e-12 (for
    example, antisymmetrizing a pure triplet state).
    """
    if rho.dims != (2, 2):
        raise ValueError(f"exchange projection supports two qubits only, got dims {rho.dims}")
    if kind == "symmetric":
        proj = symmetrizer_two_qubit().matrix
    elif kind == "antisymmetric":
        proj = antisymmetrizer_two_qubit().matrix
    else:
        raise ValueError(f"kind must be 'symmetric' or 'antisymmetric', got {kind!r}")
    raw = proj @ rho.matrix @ proj
    weight = float(np.trace(raw).real)
    if weight <= NULL_PROJECTION_TOL:
        raise NullProjectionError(f"state has weight {weight:.3e} in the {kind} sector")
    return ExchangeProjection(kind=kind, projected=DensityMatrix(rho.dims, raw / weight),
                              weight=weight)

"""Generalized Gell-Mann generator bases for SU(n).

Every decomposition in this package expands operators in these bases, so the
conventions are pinned here once: generators are Hermitian, traceless, and
orthogonal with Tr(G_i G_j) = 2 delta_ij, matching the usual Pauli and
Gell-Mann normalization.  For n = 2 the basis is exactly (sigma_x, sigma_y,
sigma_z) and for n = 3 exactly the textbook lambda_1 ... lambda_8, so
component names like C_xx or C_88 keep their conventional meaning.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

HERMITICITY_TOL = 1e-14
TRACE_TOL = 1e-14
ORTHOGONALITY_TOL = 1e-12


@dataclass(frozen=True)
class GeneratorBasis:
    """Ordered set of the n^2 - 1 SU(n) generators for one n-level party.

    ``generators`` is a read-only complex array of shape (n^2 - 1, n, n);
    ``generators[i]`` is the i-th generator matrix.
    """

    dimension: int
    generators: np.ndarray

    def __len__(self) -> int:
        return self.generators.shape[0]

    def __iter__(self):
        return iter(self.generators)


@dataclass(frozen=True)
class BasisDiagnostics:
    """Worst-case residuals of the generator-basis invariants."""

    dimension: int
    count_expected: int
    count_actual: int
    max_hermiticity_residual: float
    max_trace_residual: float
    max_orthogonality_residual: float

    @property
    def ok(self) -> bool:
        return (
            self.count_actual == self.count_expected
            and self.max_hermiticity_residual <= HERMITICITY_TOL
            and self.max_trace_residual <= TRACE_TOL
            and self.max_orthogonality_residual <= ORTHOGONALITY_TOL
        )


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _pair_generators(n: int, j: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    sym = np.zeros((n, n), dtype=complex)
    sym[j, k] = sym[k, j] = 1.0
    anti = np.zeros((n, n), dtype=complex)
    anti[j, k] = -1.0j
    anti[k, j] = 1.0j
    return sym, anti


def _diagonal_generator(n: int, l: int) -> np.ndarray:
    # sqrt(2/(l(l+1))) * (E_00 + ... + E_{l-1,l-1} - l E_{l,l}), 1 <= l <= n-1
    d = np.zeros(n)
    d[:l] = 1.0
    d[l] = -float(l)
    return np.diag(d.astype(complex)) * np.sqrt(2.0 / (l * (l + 1)))


@lru_cache(maxsize=None)
def gell_mann_basis(n: int) -> GeneratorBasis:
    """Build the n^2 - 1 generalized Gell-Mann generators of SU(n).

    Ordering: the symmetric/antisymmetric generator pair for each index pair
    (j, k), j < k, in lexicographic order, followed by the n - 1 diagonal
    generators.  n = 3 is pinned to the textbook Gell-Mann order instead
    (diag(1,-1,0) sits third); n = 2 already comes out as (x, y, z).
    """
    if n < 2:
        raise ValueError(f"generator basis requires dimension >= 2, got {n}")
    pairs: list[np.ndarray] = []
    for j in range(n):
        for k in range(j + 1, n):
            pairs.extend(_pair_generators(n, j, k))
    diags = [_diagonal_generator(n, l) for l in range(1, n)]
    if n == 3:
        ordered = pairs[:2] + diags[:1] + pairs[2:] + diags[1:]
    else:
        ordered = pairs + diags
    return GeneratorBasis(dimension=n, generators=_frozen(np.stack(ordered)))


def pauli_basis() -> GeneratorBasis:
    """The Pauli matrices (sigma_x, sigma_y, sigma_z)."""
    return gell_mann_basis(2)


def verify_basis(basis: GeneratorBasis) -> BasisDiagnostics:
    """Report worst-case violations of Hermiticity, tracelessness, and
    Tr(G_i G_j) = 2 delta_ij for an arbitrary candidate basis."""
    gens = np.asarray(basis.generators, dtype=complex)
    n = basis.dimension
    herm = float(np.abs(gens - gens.conj().transpose(0, 2, 1)).max()) if len(gens) else 0.0
    trace = float(np.abs(np.trace(gens, axis1=1, axis2=2)).max()) if len(gens) else 0.0
    gram = np.einsum("iab,jba->ij", gens, gens)
    ortho = float(np.abs(gram - 2.0 * np.eye(len(gens))).max()) if len(gens) else 0.0
    return BasisDiagnostics(
        dimension=n,
        count_expected=n * n - 1,
        count_actual=len(gens),
        max_hermiticity_residual=herm,
        max_trace_residual=trace,
        max_orthogonality_residual=ortho,
    )

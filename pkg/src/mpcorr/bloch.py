"""Correlation-tensor representation of multipartite states.

A state on parties with dimensions (n_1, ..., n_N) is equivalent to its
per-party coherence vectors together with the covariance-style correlation
tensors between parties:

    n_i      = <G_i>                                   (one party)
    C_ij     = <G_i G_j>     - n_i n_j                 (pairs)
    D_ijk    = <G_i G_j G_k> - n_i n_j n_k             (triples)
    E_ijkl   = <GGGG>        - n n n n                 (four qubits)

with G the SU(n) generators of :mod:`mpcorr.su_basis`.  Pair tensors for
three or more parties are taken on the two-party marginals, triple tensors on
the three-party marginals.  :func:`reconstruct` inverts the map exactly; the
prefactor for a correlation sector on parties S is prod_{I in S} (n_I / 2),
which follows from Tr(G_i G_j) = 2 delta_ij and is exercised by the
round-trip tests for every supported shape.
"""

import string
from dataclasses import dataclass
from functools import reduce
from math import prod
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .density import DensityMatrix, partial_trace
from .su_basis import GeneratorBasis, gell_mann_basis

IMAG_TOL = 1e-12

_ROW = string.ascii_lowercase[:8]
_COL = string.ascii_lowercase[8:16]
_COMP = string.ascii_uppercase[:8]


def _real_within(arr: np.ndarray, what: str, tol: float = IMAG_TOL) -> np.ndarray:
    """Drop an imaginary part that is guaranteed zero analytically; a large
    residue means a bug upstream, not data to keep."""
    arr = np.asarray(arr)
    if not np.iscomplexobj(arr):
        return arr.astype(float)
    resid = float(np.abs(arr.imag).max()) if arr.size else 0.0
    if resid > tol:
        raise ValueError(f"{what} has imaginary residue {resid:.3e} (tolerance {tol:.1e})")
    out = arr.real.copy()
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class BlochDecomposition:
    """Coherence vectors plus pair/triple/quadruple correlation tensors.

    ``coherence_vectors[I]`` has length n_I^2 - 1.  ``pair_correlations`` maps
    each party pair (I, J), I < J, to its C matrix; ``triple_correlations``
    maps party triples to D tensors (present for 3 and 4 parties);
    ``quad_correlations`` is the E tensor (4 qubit parties only).
    """

    dims: tuple[int, ...]
    coherence_vectors: tuple[np.ndarray, ...]
    pair_correlations: Mapping[tuple[int, int], np.ndarray]
    triple_correlations: Mapping[tuple[int, int, int], np.ndarray] | None = None
    quad_correlations: np.ndarray | None = None

    def pair(self, i: int, j: int) -> np.ndarray:
        """C matrix for an (unordered) party pair, transposed as needed."""
        if i == j:
            raise ValueError("a correlation matrix needs two distinct parties")
        if i < j:
            return self.pair_correlations[(i, j)]
        return self.pair_correlations[(j, i)].T

    def triple(self, i: int, j: int, k: int) -> np.ndarray:
        if self.triple_correlations is None:
            raise ValueError("no triple correlations in this decomposition")
        return self.triple_correlations[tuple(sorted((i, j, k)))]


def _stacks(dims: tuple[int, ...]) -> list[np.ndarray]:
    return [gell_mann_basis(d).generators for d in dims]


def _raw_expectations(rho: DensityMatrix, stacks: list[np.ndarray]) -> np.ndarray:
    """<G_{i,0} G_{j,1} ...> over *all* parties of rho, one einsum."""
    n = len(stacks)
    t = rho.matrix.reshape(rho.dims + rho.dims)
    terms = ",".join(f"{_COMP[p]}{_COL[p]}{_ROW[p]}" for p in range(n))
    state = "".join(_ROW[:n]) + "".join(_COL[:n])
    out = "".join(_COMP[:n])
    return np.einsum(f"{terms},{state}->{out}", *stacks, t)


def _embed_correlation(coefs: np.ndarray, slots: tuple[int, ...], dims: tuple[int, ...],
                       stacks: list[np.ndarray]) -> np.ndarray:
    """sum_K coefs[K] * (G_{K_1} at slot_1) x ... with identity elsewhere."""
    n = len(dims)
    comp = "".join(_COMP[i] for i in range(len(slots)))
    terms = [comp]
    ops: list[np.ndarray] = [np.asarray(coefs)]
    for pos, p in enumerate(slots):
        terms.append(f"{_COMP[pos]}{_ROW[p]}{_COL[p]}")
        ops.append(stacks[p])
    for p in range(n):
        if p not in slots:
            terms.append(f"{_ROW[p]}{_COL[p]}")
            ops.append(np.eye(dims[p], dtype=complex))
    out = "".join(_ROW[:n]) + "".join(_COL[:n])
    d = prod(dims)
    return np.einsum(",".join(terms) + "->" + out, *ops).reshape(d, d)


def coherence_vector(rho: DensityMatrix, basis: GeneratorBasis | None = None) -> np.ndarray:
    """Generator expectation values <G_i> of a single-party state."""
    if rho.num_parties != 1:
        raise ValueError(f"coherence_vector needs a single-party state, got dims {rho.dims}")
    if basis is None:
        basis = gell_mann_basis(rho.dims[0])
    if basis.dimension != rho.dims[0]:
        raise ValueError(f"basis dimension {basis.dimension} does not match state dimension {rho.dims[0]}")
    vals = np.einsum("iab,ba->i", basis.generators, rho.matrix)
    return _real_within(vals, "coherence vector")


def _marginal_vectors(rho: DensityMatrix) -> tuple[np.ndarray, ...]:
    return tuple(coherence_vector(partial_trace(rho, [p])) for p in range(rho.num_parties))


def _pair_matrix(rho: DensityMatrix, vectors: tuple[np.ndarray, ...], i: int, j: int,
                 stacks: list[np.ndarray]) -> np.ndarray:
    pair = partial_trace(rho, [i, j])
    raw = _raw_expectations(pair, [stacks[i], stacks[j]])
    return _real_within(raw - np.multiply.outer(vectors[i], vectors[j]), f"C[{i},{j}]")


def decompose_bipartite(rho: DensityMatrix) -> BlochDecomposition:
    """Coherence vectors and the C matrix of a two-party state (any n x m)."""
    if rho.num_parties != 2:
        raise ValueError(f"expected 2 parties, got dims {rho.dims}")
    stacks = _stacks(rho.dims)
    vectors = _marginal_vectors(rho)
    raw = _raw_expectations(rho, stacks)
    c = _real_within(raw - np.multiply.outer(vectors[0], vectors[1]), "C")
    return BlochDecomposition(rho.dims, vectors, MappingProxyType({(0, 1): c}))


def decompose_tripartite(rho: DensityMatrix) -> BlochDecomposition:
    """Coherence vectors, the three pairwise C matrices (on two-party
    marginals), and the D tensor of a three-party state.

    Parties must have equal dimension; the triple tensor is not defined here
    for mixed-dimension systems.
    """
    if rho.num_parties != 3:
        raise ValueError(f"expected 3 parties, got dims {rho.dims}")
    if len(set(rho.dims)) != 1:
        raise ValueError(f"tripartite decomposition requires equal party dimensions, got {rho.dims}")
    stacks = _stacks(rho.dims)
    vectors = _marginal_vectors(rho)
    pairs = {
        (i, j): _pair_matrix(rho, vectors, i, j, stacks)
        for i in range(3) for j in range(i + 1, 3)
    }
    raw3 = _raw_expectations(rho, stacks)
    outer3 = reduce(np.multiply.outer, vectors)
    d = _real_within(raw3 - outer3, "D")
    return BlochDecomposition(rho.dims, vectors, MappingProxyType(pairs),
                              MappingProxyType({(0, 1, 2): d}))


def decompose_quadripartite(rho: DensityMatrix) -> BlochDecomposition:
    """Full decomposition of a four-qubit state: coherence vectors, six pair
    C matrices, four triple D tensors (on three-party marginals), and the
    four-party E tensor."""
    if rho.num_parties != 4:
        raise ValueError(f"expected 4 parties, got dims {rho.dims}")
    if rho.dims != (2, 2, 2, 2):
        raise ValueError(f"four-party decomposition supports qubits only, got dims {rho.dims}")
    stacks = _stacks(rho.dims)
    vectors = _marginal_vectors(rho)
    pairs = {
        (i, j): _pair_matrix(rho, vectors, i, j, stacks)
        for i in range(4) for j in range(i + 1, 4)
    }
    triples = {}
    for trip in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]:
        marg = partial_trace(rho, list(trip))
        raw = _raw_expectations(marg, [stacks[p] for p in trip])
        outer3 = reduce(np.multiply.outer, [vectors[p] for p in trip])
        triples[trip] = _real_within(raw - outer3, f"D{trip}")
    raw4 = _raw_expectations(rho, stacks)
    outer4 = reduce(np.multiply.outer, vectors)
    e = _real_within(raw4 - outer4, "E")
    return BlochDecomposition(rho.dims, vectors, MappingProxyType(pairs),
                              MappingProxyType(triples), e)


def decompose(rho: DensityMatrix) -> BlochDecomposition:
    """Dispatch to the 2-, 3-, or 4-party decomposition by party count."""
    n = rho.num_parties
    if n == 2:
        return decompose_bipartite(rho)
    if n == 3:
        return decompose_tripartite(rho)
    if n == 4:
        return decompose_quadripartite(rho)
    raise ValueError(f"decomposition supports 2 to 4 parties, got {n}")


def _check_vector_shapes(decomp: BlochDecomposition) -> None:
    for p, v in enumerate(decomp.coherence_vectors):
        want = decomp.dims[p] ** 2 - 1
        if np.shape(v) != (want,):
            raise ValueError(f"coherence vector {p} has shape {np.shape(v)}, expected ({want},)")


def reconstruct(decomp: BlochDecomposition) -> DensityMatrix:
    """Rebuild the density matrix from a decomposition.

    Exact (to roundoff) for decompositions produced by this module.  For
    hand-built tensors the result is Hermitian with unit trace but may fail
    positivity; it is not re-validated here.
    """
    dims = tuple(decomp.dims)
    n = len(dims)
    if n < 2 or n > 4:
        raise ValueError(f"reconstruction supports 2 to 4 parties, got {n}")
    _check_vector_shapes(decomp)
    stacks = _stacks(dims)
    factors = []
    for p in range(n):
        vec = np.asarray(decomp.coherence_vectors[p], dtype=float)
        factors.append(np.eye(dims[p], dtype=complex)
                       + (dims[p] / 2.0) * np.einsum("i,iab->ab", vec, stacks[p]))
    acc = reduce(np.kron, factors)
    for (i, j), c in sorted(decomp.pair_correlations.items()):
        c = np.asarray(c, dtype=float)
        want = (dims[i] ** 2 - 1, dims[j] ** 2 - 1)
        if c.shape != want:
            raise ValueError(f"C[{i},{j}] has shape {c.shape}, expected {want}")
        acc = acc + (dims[i] * dims[j] / 4.0) * _embed_correlation(c, (i, j), dims, stacks)
    if decomp.triple_correlations is not None:
        for trip, d in sorted(decomp.triple_correlations.items()):
            d = np.asarray(d, dtype=float)
            want = tuple(dims[p] ** 2 - 1 for p in trip)
            if d.shape != want:
                raise ValueError(f"D{trip} has shape {d.shape}, expected {want}")
            scale = prod(dims[p] for p in trip) / 8.0
            acc = acc + scale * _embed_correlation(d, tuple(trip), dims, stacks)
    if decomp.quad_correlations is not None:
        e = np.asarray(decomp.quad_correlations, dtype=float)
        want = tuple(d * d - 1 for d in dims)
        if n != 4 or e.shape != want:
            raise ValueError(f"E has shape {e.shape}, expected {want} on 4 parties")
        acc = acc + (prod(dims) / 16.0) * _embed_correlation(e, (0, 1, 2, 3), dims, stacks)
    return DensityMatrix(dims, acc / prod(dims))

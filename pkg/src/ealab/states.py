"""Construction and sampling of the states used throughout the library.

Covers the maximally entangled state, Werner states, GHZ and W states, the
classically correlated two-qubit state, Schmidt-parameterized pure states,
and seeded Haar-random sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import dims_product, hermiticity_defect, min_eigenvalue, partial_trace

NORM_ATOL = 1e-12
STATE_ATOL = 1e-10


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


def _canonical_dims(dims) -> tuple[int, ...]:
    if isinstance(dims, (int, np.integer)):
        dims = (int(dims),)
    ds = tuple(int(d) for d in dims)
    if not ds or any(d < 1 for d in ds):
        raise ValueError(f"factor dimensions must be positive, got {ds}")
    return ds


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit vector on a composite space with explicit factor dimensions."""

    amplitudes: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        ds = _canonical_dims(self.dims)
        if dims_product(ds) != amp.size:
            raise ValueError(
                f"dims {ds} do not match amplitude vector of length {amp.size}"
            )
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > NORM_ATOL:
            raise ValueError(f"amplitudes are not normalized (norm {norm!r})")
        object.__setattr__(self, "amplitudes", _freeze(amp))
        object.__setattr__(self, "dims", ds)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def density(self) -> "DensityOperator":
        """Rank-one projector onto this state."""
        m = np.outer(self.amplitudes, self.amplitudes.conj())
        return DensityOperator(m, self.dims)

    def overlap(self, other: "PureState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Positive unit-trace operator with explicit factor dimensions."""

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        ds = _canonical_dims(self.dims)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        if dims_product(ds) != m.shape[0]:
            raise ValueError(f"dims {ds} do not match matrix dimension {m.shape[0]}")
        defect = hermiticity_defect(m)
        if defect > STATE_ATOL:
            raise ValueError(f"matrix is not Hermitian (max deviation {defect:.3e})")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > STATE_ATOL:
            raise ValueError(f"matrix does not have unit trace (trace {tr!r})")
        low = min_eigenvalue(m, atol=STATE_ATOL)
        if low < -STATE_ATOL:
            raise ValueError(
                f"matrix is not positive semidefinite (min eigenvalue {low:.3e})"
            )
        object.__setattr__(self, "matrix", _freeze(m))
        object.__setattr__(self, "dims", ds)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def marginal(self, keep: Sequence[int]) -> "DensityOperator":
        """Reduced state on the kept factors."""
        kept = tuple(sorted({int(i) for i in keep}))
        m = partial_trace(self.matrix, self.dims, kept)
        return DensityOperator(m, tuple(self.dims[i] for i in kept))


@dataclass(frozen=True, eq=False)
class SchmidtDecomposition:
    """Biorthogonal expansion of a bipartite pure state.

    ``coefficients`` are the descending nonnegative Schmidt coefficients
    (their squares sum to one); column ``j`` of ``left_basis`` and
    ``right_basis`` carries the j-th Schmidt vector of each block, so the
    state is ``sum_j c_j kron(left_j, right_j)`` in block order.
    """

    coefficients: np.ndarray
    left_basis: np.ndarray
    right_basis: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=float).reshape(-1)
        if np.any(c < -NORM_ATOL) or np.any(np.diff(c) > NORM_ATOL):
            raise ValueError("coefficients must be nonnegative and descending")
        if abs(np.sum(c**2) - 1.0) > 1e-10:
            raise ValueError("squared coefficients must sum to one")
        object.__setattr__(self, "coefficients", _freeze(c).real)
        object.__setattr__(self, "left_basis", _freeze(self.left_basis))
        object.__setattr__(self, "right_basis", _freeze(self.right_basis))

    def reconstruct(self) -> np.ndarray:
        """Amplitude vector in (left block, right block) factor order."""
        mat = (self.left_basis * self.coefficients) @ self.right_basis.T
        return mat.reshape(-1)


def max_entangled(d: int) -> PureState:
    """Maximally entangled state (1/sqrt(d)) sum_j |jj> on dims (d, d)."""
    d = int(d)
    if d < 2:
        raise ValueError(f"local dimension must be at least 2, got {d}")
    amp = np.zeros(d * d, dtype=complex)
    amp[:: d + 1] = 1.0 / np.sqrt(d)
    return PureState(amp, (d, d))


def max_entangled_projector(d: int) -> np.ndarray:
    """Projector matrix onto the maximally entangled state."""
    amp = max_entangled(d).amplitudes
    return np.outer(amp, amp.conj())


def werner(lam: float, d: int = 2) -> DensityOperator:
    """Werner state ``lam * P_+  +  (1 - lam) * (I/d) ox (I/d)``."""
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"mixing parameter must lie in [0, 1], got {lam}")
    m = lam * max_entangled_projector(d) + (1 - lam) * np.eye(d * d) / d**2
    return DensityOperator(m, (d, d))


def ghz(n: int = 3) -> PureState:
    """GHZ state (|0...0> + |1...1>)/sqrt(2) on n qubits."""
    n = int(n)
    if n < 2:
        raise ValueError(f"need at least 2 qubits, got {n}")
    amp = np.zeros(2**n, dtype=complex)
    amp[0] = amp[-1] = 1.0 / np.sqrt(2)
    return PureState(amp, (2,) * n)


def w_state(n: int = 3) -> PureState:
    """Uniform single-excitation superposition on n qubits."""
    n = int(n)
    if n < 2:
        raise ValueError(f"need at least 2 qubits, got {n}")
    amp = np.zeros(2**n, dtype=complex)
    for j in range(n):
        amp[1 << j] = 1.0 / np.sqrt(n)
    return PureState(amp, (2,) * n)


def classically_correlated_pair() -> DensityOperator:
    """Two-qubit state (|00><00| + |11><11|)/2; every GHZ pair marginal."""
    return DensityOperator(np.diag([0.5, 0.0, 0.0, 0.5]), (2, 2))


def schmidt_pure(q0: float) -> PureState:
    """Two-qubit state sqrt(q0)|00> + sqrt(1-q0)|11>."""
    q0 = float(q0)
    if not 0.0 <= q0 <= 1.0:
        raise ValueError(f"Schmidt weight must lie in [0, 1], got {q0}")
    amp = np.zeros(4, dtype=complex)
    amp[0] = np.sqrt(q0)
    amp[3] = np.sqrt(1.0 - q0)
    return PureState(amp, (2, 2))


def schmidt(psi: PureState, left: Sequence[int]) -> SchmidtDecomposition:
    """Schmidt decomposition across the (left block | remaining factors) cut.

    ``left`` lists the factor indices of the first block; the second block
    is the complement, both kept in original factor order.  Computed from
    the singular value decomposition of the reshaped amplitude matrix.
    """
    n = len(psi.dims)
    left_idx = tuple(sorted({int(i) for i in left}))
    if any(i < 0 or i >= n for i in left_idx):
        raise ValueError(f"left block {left_idx} out of range for {n} factors")
    right_idx = tuple(i for i in range(n) if i not in left_idx)
    if not left_idx or not right_idx:
        raise ValueError("partition must split the factors into two nonempty blocks")
    perm = left_idx + right_idx
    tens = psi.amplitudes.reshape(psi.dims).transpose(perm)
    d_left = dims_product([psi.dims[i] for i in left_idx])
    d_right = dims_product([psi.dims[i] for i in right_idx])
    u, s, vh = np.linalg.svd(tens.reshape(d_left, d_right), full_matrices=False)
    return SchmidtDecomposition(s, u, vh.T)


def _haar_amplitudes(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def haar_pure(dims, seed) -> PureState:
    """Haar-random pure state, deterministic per seed.

    Sampled as a normalized vector of i.i.d. standard complex Gaussians.
    ``seed`` is anything ``numpy.random.default_rng`` accepts (a 64-bit
    integer in typical use).
    """
    ds = _canonical_dims(dims)
    rng = np.random.default_rng(seed)
    return PureState(_haar_amplitudes(rng, dims_product(ds)), ds)


def random_density(dims, rank: int, seed) -> DensityOperator:
    """Random mixture of ``rank`` Haar pure states with Dirichlet weights."""
    ds = _canonical_dims(dims)
    d = dims_product(ds)
    rank = int(rank)
    if rank < 1 or rank > d:
        raise ValueError(f"rank must lie in [1, {d}], got {rank}")
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(rank))
    m = np.zeros((d, d), dtype=complex)
    for w in weights:
        v = _haar_amplitudes(rng, d)
        m += w * np.outer(v, v.conj())
    return DensityOperator(m, ds)


def tensor_pure(a: PureState, b: PureState) -> PureState:
    """Product state a ox b with concatenated factor dimensions."""
    return PureState(np.kron(a.amplitudes, b.amplitudes), a.dims + b.dims)


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a complex Gaussian matrix."""
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))

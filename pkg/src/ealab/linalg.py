"""Dense complex linear algebra on tensor-product spaces.

Operators are plain square complex numpy arrays.  Composite systems carry an
explicit tuple of factor dimensions; factor 0 is the most significant index
(big-endian), so a composite basis index decomposes as
``i = i0*(d1*...*d_{n-1}) + ... + i_{n-1}``, matching ``numpy.kron`` order.
All factor index sets are 0-based.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence

import numpy as np

# Matrices within this distance of their adjoint count as Hermitian and are
# symmetrized before eigensolving; absorbs rounding from repeated kron/apply.
HERMITIAN_ATOL = 1e-10


def as_operator(m) -> np.ndarray:
    """Coerce input to a square complex matrix."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def dims_product(dims: Sequence[int]) -> int:
    p = 1
    for d in dims:
        p *= int(d)
    return p


def check_dims(m, dims: Sequence[int]) -> tuple[np.ndarray, tuple[int, ...]]:
    """Validate that ``dims`` factorizes the dimension of ``m``."""
    a = as_operator(m)
    ds = tuple(int(d) for d in dims)
    if not ds or any(d < 1 for d in ds):
        raise ValueError(f"factor dimensions must be positive, got {ds}")
    if dims_product(ds) != a.shape[0]:
        raise ValueError(
            f"factor dimensions {ds} do not match matrix dimension {a.shape[0]}"
        )
    return a, ds


def _factor_subset(indices: Iterable[int], n: int, name: str) -> tuple[int, ...]:
    idx = tuple(sorted({int(i) for i in indices}))
    if any(i < 0 or i >= n for i in idx):
        raise ValueError(f"{name} {idx} out of range for {n} factors")
    return idx


def kron(a, b) -> np.ndarray:
    """Kronecker product with the big-endian index convention."""
    return np.kron(as_operator(a), as_operator(b))


def kron_all(ops: Sequence) -> np.ndarray:
    """Left-folded Kronecker product of a sequence of operators."""
    if not ops:
        raise ValueError("kron_all needs at least one operator")
    return reduce(np.kron, (as_operator(o) for o in ops))


def partial_trace(m, dims: Sequence[int], keep: Iterable[int]) -> np.ndarray:
    """Trace out all factors not listed in ``keep``.

    The result acts on the kept factors in their original order and has the
    same trace as the input.
    """
    a, ds = check_dims(m, dims)
    n = len(ds)
    kept = _factor_subset(keep, n, "keep")
    if not kept:
        raise ValueError("keep must list at least one factor")
    t = a.reshape(ds + ds)
    bra = list(range(n))
    ket = [i + n if i in kept else i for i in range(n)]
    out = [i for i in kept] + [i + n for i in kept]
    d_keep = dims_product([ds[i] for i in kept])
    return np.einsum(t, bra + ket, out).reshape(d_keep, d_keep)


def partial_transpose(m, dims: Sequence[int], transposed: Iterable[int]) -> np.ndarray:
    """Transpose only the listed tensor factors."""
    a, ds = check_dims(m, dims)
    n = len(ds)
    flipped = _factor_subset(transposed, n, "transposed")
    t = a.reshape(ds + ds)
    axes = list(range(2 * n))
    for i in flipped:
        axes[i], axes[n + i] = axes[n + i], axes[i]
    d = a.shape[0]
    return t.transpose(axes).reshape(d, d)


def permute_factors(m, dims: Sequence[int], perm: Sequence[int]) -> np.ndarray:
    """Reorder tensor factors so new factor ``k`` is old factor ``perm[k]``."""
    a, ds = check_dims(m, dims)
    n = len(ds)
    p = tuple(int(i) for i in perm)
    if sorted(p) != list(range(n)):
        raise ValueError(f"perm {p} is not a permutation of {n} factors")
    t = a.reshape(ds + ds)
    axes = list(p) + [i + n for i in p]
    d = a.shape[0]
    return t.transpose(axes).reshape(d, d)


def hermiticity_defect(m) -> float:
    """Largest absolute entry of ``m - m^dagger``."""
    a = as_operator(m)
    return float(np.max(np.abs(a - a.conj().T)))


def is_hermitian(m, atol: float = HERMITIAN_ATOL) -> bool:
    return hermiticity_defect(m) <= atol


def hermitian_eigenvalues(m, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Ascending real spectrum of a Hermitian matrix.

    Rejects inputs whose deviation from their adjoint exceeds ``atol``;
    accepted inputs are symmetrized before the eigensolve.
    """
    a = as_operator(m)
    defect = hermiticity_defect(a)
    if defect > atol:
        raise ValueError(
            f"matrix is not Hermitian within {atol:g} (max deviation {defect:.3e})"
        )
    return np.linalg.eigvalsh((a + a.conj().T) / 2)


def min_eigenvalue(m, atol: float = HERMITIAN_ATOL) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    return float(hermitian_eigenvalues(m, atol=atol)[0])

"""Shared random generators for the test suite."""

import numpy as np

from ealab import DensityOperator, MeasurePrepare, random_density


def random_hermitian(dim, rng):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (g + g.conj().T) / 2


def random_state_matrix(dim, rng):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ g.conj().T
    return m / np.trace(m)


def random_unitary(dim, rng):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_povm(dim, n_effects, rng):
    """POVM from normalized random positive operators."""
    raw = []
    for _ in range(n_effects):
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        raw.append(g @ g.conj().T)
    total = sum(raw)
    evals, vecs = np.linalg.eigh(total)
    inv_root = (vecs / np.sqrt(evals)) @ vecs.conj().T
    return [inv_root @ a @ inv_root for a in raw]


def random_measure_prepare(in_dim, out_dims, n_effects, seed):
    """Random measure-and-prepare data with mixed random prepares."""
    rng = np.random.default_rng(seed)
    povm = random_povm(in_dim, n_effects, rng)
    d_out = int(np.prod(out_dims))
    prepares = tuple(
        random_density(out_dims, rank=min(2, d_out), seed=(seed, 7 + j))
        for j in range(n_effects)
    )
    return MeasurePrepare(tuple(povm), prepares)


def random_separable_two_qubit(seed, n_terms=6):
    """Random mixture of two-qubit product pure states."""
    rng = np.random.default_rng(seed)
    m = np.zeros((4, 4), dtype=complex)
    weights = rng.dirichlet(np.ones(n_terms))
    for w in weights:
        a = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        v = np.kron(a / np.linalg.norm(a), b / np.linalg.norm(b))
        m += w * np.outer(v, v.conj())
    return DensityOperator(m, (2, 2))


def apply_via_choi(choi: DensityOperator, rho: np.ndarray) -> np.ndarray:
    """Independent route for channel application through the Choi operator.

    Evaluates d_in * tr_in[ Omega (I_out ox rho^T) ] without touching the
    Kraus machinery.
    """
    out_dim, in_dim = choi.dims
    lifted = np.kron(np.eye(out_dim), rho.T)
    prod = choi.matrix @ lifted
    t = prod.reshape(out_dim, in_dim, out_dim, in_dim)
    return in_dim * np.einsum("ikjk->ij", t)

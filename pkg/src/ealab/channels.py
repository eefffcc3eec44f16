"""Quantum channels: Kraus and Choi forms, the depolarizing family,
measure-and-prepare channels, composition, tensoring, and state application.

A channel is stored canonically as a tuple of Kraus operators; complete
positivity is then automatic and trace preservation is checked on
construction.  The Choi operator uses the trace-one convention
``Omega = (E ox Id)[P_+]`` with factor order (output, input), so the Choi
operator of the depolarizing channel is literally the Werner state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .linalg import (
    as_operator,
    hermitian_eigenvalues,
    hermiticity_defect,
    kron,
    partial_trace,
)
from .states import DensityOperator, PureState, max_entangled

TP_ATOL = 1e-10
CHOI_RANK_TOL = 1e-12


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Channel:
    """Completely positive trace-preserving map in Kraus form."""

    kraus: tuple[np.ndarray, ...]
    in_dim: int = field(init=False)
    out_dim: int = field(init=False)

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=complex) for k in self.kraus)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        out_dim, in_dim = ops[0].shape if ops[0].ndim == 2 else (0, 0)
        for k in ops:
            if k.ndim != 2 or k.shape != (out_dim, in_dim):
                raise ValueError("Kraus operators must share one (out, in) shape")
        acc = np.zeros((in_dim, in_dim), dtype=complex)
        for k in ops:
            acc += k.conj().T @ k
        defect = np.max(np.abs(acc - np.eye(in_dim)))
        if defect > TP_ATOL:
            raise ValueError(
                f"trace preservation violated: sum K^dag K deviates from the "
                f"identity by {defect:.3e}"
            )
        object.__setattr__(self, "kraus", tuple(_freeze(k) for k in ops))
        object.__setattr__(self, "in_dim", in_dim)
        object.__setattr__(self, "out_dim", out_dim)


@dataclass(frozen=True, eq=False)
class MeasurePrepare:
    """POVM together with the states prepared for each outcome."""

    povm: tuple[np.ndarray, ...]
    prepares: tuple[DensityOperator, ...]

    def __post_init__(self):
        effects = tuple(as_operator(f) for f in self.povm)
        preps = tuple(self.prepares)
        if not effects or len(effects) != len(preps):
            raise ValueError("need matching nonempty POVM and prepare lists")
        d = effects[0].shape[0]
        acc = np.zeros((d, d), dtype=complex)
        for f in effects:
            if f.shape != (d, d):
                raise ValueError("POVM effects must share one dimension")
            if hermiticity_defect(f) > TP_ATOL:
                raise ValueError("POVM effects must be Hermitian")
            low = float(hermitian_eigenvalues(f)[0])
            if low < -TP_ATOL:
                raise ValueError(
                    f"POVM effect is not positive semidefinite (min eig {low:.3e})"
                )
            acc += f
        defect = np.max(np.abs(acc - np.eye(d)))
        if defect > TP_ATOL:
            raise ValueError(
                f"POVM does not sum to the identity (deviation {defect:.3e})"
            )
        d_out = preps[0].dim
        if any(p.dim != d_out for p in preps):
            raise ValueError("prepared states must share one dimension")
        object.__setattr__(self, "povm", tuple(_freeze(f) for f in effects))
        object.__setattr__(self, "prepares", preps)


def identity_channel(d: int) -> Channel:
    return Channel((np.eye(int(d), dtype=complex),))


def depolarizing(lam: float, d: int = 2, allow_extended: bool = False) -> Channel:
    """Depolarizing channel ``X -> lam*X + (1-lam)*tr(X)*I/d``.

    The default parameter range is [0, 1].  With ``allow_extended`` the range
    widens to the full complete-positivity interval [-1/(d^2-1), 1].
    """
    lam = float(lam)
    d = int(d)
    lo = -1.0 / (d * d - 1) if allow_extended else 0.0
    if not lo <= lam <= 1.0:
        raise ValueError(
            f"depolarizing parameter {lam} outside accepted range [{lo:g}, 1]"
        )
    if lam < 0:
        # no Kraus mixture exists below lam = 0; rebuild from the Choi form
        omega = lam * _max_ent_projector(d) + (1 - lam) * np.eye(d * d) / d**2
        return channel_from_choi(DensityOperator(omega, (d, d)))
    ops: list[np.ndarray] = []
    if lam > 0:
        ops.append(np.sqrt(lam) * np.eye(d, dtype=complex))
    if lam < 1:
        w = np.sqrt((1 - lam) / d)
        for i in range(d):
            for j in range(d):
                k = np.zeros((d, d), dtype=complex)
                k[i, j] = w
                ops.append(k)
    return Channel(tuple(ops))


def _max_ent_projector(d: int) -> np.ndarray:
    amp = max_entangled(d).amplitudes
    return np.outer(amp, amp.conj())


def apply(e: Channel, state, out_dims=None) -> DensityOperator:
    """Apply a channel to a state (``PureState`` or ``DensityOperator``).

    The output keeps the input's factor structure when the dimensions still
    match; pass ``out_dims`` to override.
    """
    rho = state.density() if isinstance(state, PureState) else state
    if rho.dim != e.in_dim:
        raise ValueError(
            f"channel expects input dimension {e.in_dim}, state has {rho.dim}"
        )
    stack = np.stack(e.kraus)
    out = np.einsum("nij,jk,nlk->il", stack, rho.matrix, stack.conj())
    if out_dims is None:
        out_dims = rho.dims if e.out_dim == rho.dim else (e.out_dim,)
    return DensityOperator(out, out_dims)


def compose(e: Channel, f: Channel) -> Channel:
    """Composition e after f (first ``f``, then ``e``)."""
    if f.out_dim != e.in_dim:
        raise ValueError(
            f"cannot compose: inner channel outputs dimension {f.out_dim}, "
            f"outer expects {e.in_dim}"
        )
    return Channel(tuple(ke @ kf for ke in e.kraus for kf in f.kraus))


def tensor(a: Channel, b: Channel) -> Channel:
    """Local channel a ox b acting independently on two subsystems."""
    return Channel(tuple(kron(ka, kb) for ka in a.kraus for kb in b.kraus))


def tensor_power(e: Channel, k: int) -> Channel:
    k = int(k)
    if k < 1:
        raise ValueError(f"tensor power must be at least 1, got {k}")
    out = e
    for _ in range(k - 1):
        out = tensor(out, e)
    return out


def choi_from_kraus(kraus: Sequence[np.ndarray]) -> np.ndarray:
    """Choi matrix ``(E ox Id)[P_+]`` of a Kraus set, factor order (out, in)."""
    ops = [np.asarray(k, dtype=complex) for k in kraus]
    out_dim, in_dim = ops[0].shape
    d = out_dim * in_dim
    omega = np.zeros((d, d), dtype=complex)
    for k in ops:
        w = k.reshape(-1) / np.sqrt(in_dim)
        omega += np.outer(w, w.conj())
    return omega


def choi_of(e: Channel) -> DensityOperator:
    """Choi operator of a channel, a density operator on dims (out, in)."""
    return DensityOperator(choi_from_kraus(e.kraus), (e.out_dim, e.in_dim))


def kraus_from_choi(
    omega: np.ndarray, in_dim: int, out_dim: int, rank_tol: float = CHOI_RANK_TOL
) -> list[np.ndarray]:
    """Kraus operators from the eigendecomposition of a Choi matrix.

    Eigenvalues at or below ``rank_tol`` are discarded; this truncation keeps
    Choi round-trips numerically stable.
    """
    m = as_operator(omega)
    evals, vecs = np.linalg.eigh((m + m.conj().T) / 2)
    ops = []
    for mu, v in zip(evals, vecs.T):
        if mu > rank_tol:
            ops.append(np.sqrt(in_dim * mu) * v.reshape(out_dim, in_dim))
    return ops


def channel_from_choi(omega: DensityOperator, rank_tol: float = CHOI_RANK_TOL) -> Channel:
    """Reconstruct the channel represented by a Choi operator.

    ``omega`` must carry dims (out, in) and satisfy the channel invariants:
    positivity (guaranteed by ``DensityOperator``) and a maximally mixed
    partial trace over the output factor.
    """
    if len(omega.dims) != 2:
        raise ValueError(f"Choi operator needs dims (out, in), got {omega.dims}")
    out_dim, in_dim = omega.dims
    marginal = partial_trace(omega.matrix, omega.dims, keep=(1,))
    defect = np.max(np.abs(marginal - np.eye(in_dim) / in_dim))
    if defect > TP_ATOL:
        raise ValueError(
            f"not a channel: partial trace over the output factor deviates "
            f"from I/{in_dim} by {defect:.3e}"
        )
    return Channel(tuple(kraus_from_choi(omega.matrix, in_dim, out_dim, rank_tol)))


def _psd_sqrt(f: np.ndarray) -> np.ndarray:
    evals, vecs = np.linalg.eigh((f + f.conj().T) / 2)
    if evals[0] < -TP_ATOL:
        raise ValueError(f"matrix is not positive semidefinite (min eig {evals[0]:.3e})")
    return (vecs * np.sqrt(np.clip(evals, 0.0, None))) @ vecs.conj().T


def measure_prepare_channel(mp: MeasurePrepare) -> Channel:
    """Channel ``X -> sum_j tr(X F_j) rho_j`` from measure-and-prepare data.

    The Choi operator of such a channel is separable by construction, so the
    result is always entanglement-breaking.
    """
    d_in = mp.povm[0].shape[0]
    ops: list[np.ndarray] = []
    for f, prep in zip(mp.povm, mp.prepares):
        root = _psd_sqrt(f)
        evals, vecs = np.linalg.eigh(prep.matrix)
        for p, phi in zip(evals, vecs.T):
            if p <= 1e-14:
                continue
            scale = np.sqrt(p)
            for b in range(d_in):
                row = root[b, :]
                if np.linalg.norm(row) <= 1e-14:
                    continue
                ops.append(scale * np.outer(phi, row))
    return Channel(tuple(ops))


def constant_channel(omega: DensityOperator, in_dim: int | None = None) -> Channel:
    """Channel contracting every input state to the fixed state ``omega``."""
    d = omega.dim if in_dim is None else int(in_dim)
    mp = MeasurePrepare((np.eye(d, dtype=complex),), (omega,))
    return measure_prepare_channel(mp)


def random_channel(
    d_in: int, d_out: int | None = None, kraus_rank: int | None = None, seed=0
) -> Channel:
    """Random channel from a Haar-random Stinespring isometry; seed-deterministic."""
    d_in = int(d_in)
    d_out = d_in if d_out is None else int(d_out)
    k = d_in * d_out if kraus_rank is None else int(kraus_rank)
    if k < 1 or d_out * k < d_in:
        raise ValueError(f"kraus rank {k} too small for a {d_in}->{d_out} isometry")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d_out * k, d_in)) + 1j * rng.standard_normal((d_out * k, d_in))
    q, _ = np.linalg.qr(g)
    return Channel(tuple(q[i * d_out : (i + 1) * d_out, :] for i in range(k)))


# ---------------------------------------------------------------------------
# JSON channel descriptions (the wire format consumed by the CLI)
# ---------------------------------------------------------------------------
#
# A channel description is an object with a "kind" field:
#   {"kind": "depolarizing", "lambda": 0.5, "d": 2}
#   {"kind": "kraus", "ops": [<matrix>, ...]}
#   {"kind": "choi", "out_dim": 2, "in_dim": 2, "matrix": <matrix>}
#   {"kind": "measure_prepare", "povm": [<matrix>, ...],
#    "prepares": [<matrix>, ...], "prepare_dims": [2, 2]}
# where <matrix> is a row-major nested array whose entries are [re, im] pairs.


def matrix_from_json(rows) -> np.ndarray:
    try:
        arr = np.asarray(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix entry: {exc}") from exc
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ValueError(
            "matrices must be nested row-major arrays of [re, im] pairs"
        )
    return arr[:, :, 0] + 1j * arr[:, :, 1]


def matrix_to_json(m) -> list:
    a = np.asarray(m, dtype=complex)
    return [[[float(x.real), float(x.imag)] for x in row] for row in a]


def channel_from_spec(spec: dict) -> Channel:
    """Build a channel from its JSON description (see module comment)."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ValueError("channel description must be an object with a 'kind' field")
    kind = spec["kind"]
    if kind == "depolarizing":
        if "lambda" not in spec:
            raise ValueError("depolarizing description needs a 'lambda' field")
        return depolarizing(float(spec["lambda"]), int(spec.get("d", 2)))
    if kind == "kraus":
        ops = spec.get("ops")
        if not ops:
            raise ValueError("kraus description needs a nonempty 'ops' list")
        return Channel(tuple(matrix_from_json(k) for k in ops))
    if kind == "choi":
        for key in ("out_dim", "in_dim", "matrix"):
            if key not in spec:
                raise ValueError(f"choi description needs a '{key}' field")
        dims = (int(spec["out_dim"]), int(spec["in_dim"]))
        return channel_from_choi(DensityOperator(matrix_from_json(spec["matrix"]), dims))
    if kind == "measure_prepare":
        povm = spec.get("povm")
        preps = spec.get("prepares")
        if not povm or not preps:
            raise ValueError(
                "measure_prepare description needs 'povm' and 'prepares' lists"
            )
        prep_mats = [matrix_from_json(p) for p in preps]
        pdims = spec.get("prepare_dims")
        prepares = tuple(
            DensityOperator(p, tuple(pdims) if pdims else (p.shape[0],))
            for p in prep_mats
        )
        mp = MeasurePrepare(tuple(matrix_from_json(f) for f in povm), prepares)
        return measure_prepare_channel(mp)
    raise ValueError(f"unknown channel kind {kind!r}")


def load_channel_spec(path) -> Channel:
    with open(path, "r", encoding="utf-8") as fh:
        return channel_from_spec(json.load(fh))

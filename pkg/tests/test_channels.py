"""Tests for channel construction, algebra, and representations."""

import numpy as np
import pytest

from ealab import (
    Channel,
    DensityOperator,
    MeasurePrepare,
    apply,
    channel_from_choi,
    channel_from_spec,
    choi_of,
    classically_correlated_pair,
    compose,
    constant_channel,
    depolarizing,
    ghz,
    identity_channel,
    kron,
    max_entangled,
    max_entangled_projector,
    measure_prepare_channel,
    permute_factors,
    random_channel,
    random_density,
    schmidt_pure,
    tensor,
    tensor_power,
    werner,
)
from ealab.channels import matrix_from_json, matrix_to_json
from helpers import apply_via_choi, random_state_matrix, random_unitary


def basis_unit(i, j, d=2):
    m = np.zeros((d, d), dtype=complex)
    m[i, j] = 1.0
    return m


def channels_equal(a, b, atol=1e-10):
    """Equality as maps, via the Choi representation."""
    return np.max(np.abs(choi_of(a).matrix - choi_of(b).matrix)) < atol


class TestChannelType:
    def test_rejects_empty_kraus(self):
        with pytest.raises(ValueError):
            Channel(())

    def test_rejects_non_trace_preserving(self):
        with pytest.raises(ValueError, match="trace preservation"):
            Channel((np.eye(2) * 0.5,))

    def test_rejects_mixed_shapes(self):
        with pytest.raises(ValueError):
            Channel((np.eye(2), np.eye(3)))

    def test_dims_inferred(self):
        e = identity_channel(3)
        assert (e.in_dim, e.out_dim) == (3, 3)


class TestDepolarizing:
    def test_full_strength_is_identity(self):
        assert channels_equal(depolarizing(1.0, 2), identity_channel(2))

    def test_zero_strength_contracts_to_mixture(self):
        e = depolarizing(0.0, 2)
        for seed in range(3):
            rho = random_density((2,), rank=2, seed=seed)
            assert np.allclose(apply(e, rho).matrix, np.eye(2) / 2)

    @pytest.mark.parametrize("lam", [0.0, 0.25, 1 / 3, 0.5, 1.0])
    def test_choi_is_werner(self, lam):
        diff = np.abs(choi_of(depolarizing(lam, 2)).matrix - werner(lam, 2).matrix)
        assert np.max(diff) < 1e-12

    def test_default_range(self):
        with pytest.raises(ValueError):
            depolarizing(-0.1, 2)
        with pytest.raises(ValueError):
            depolarizing(1.1, 2)

    def test_extended_range(self):
        e = depolarizing(-1 / 3, 2, allow_extended=True)
        rho = random_density((2,), rank=2, seed=0)
        out = apply(e, rho)
        assert np.trace(out.matrix) == pytest.approx(1.0)
        with pytest.raises(ValueError):
            depolarizing(-0.4, 2, allow_extended=True)

    def test_action_formula(self):
        rng = np.random.default_rng(0)
        lam = 0.37
        e = depolarizing(lam, 3)
        rho = random_state_matrix(3, rng)
        expected = lam * rho + (1 - lam) * np.eye(3) / 3
        got = apply(e, DensityOperator(rho, (3,))).matrix
        assert np.max(np.abs(got - expected)) < 1e-12

    def test_unitary_covariance(self):
        rng = np.random.default_rng(1)
        e = depolarizing(0.6, 2)
        for _ in range(5):
            u = random_unitary(2, rng)
            rho = random_state_matrix(2, rng)
            left = apply(e, DensityOperator(u @ rho @ u.conj().T, (2,))).matrix
            right = u @ apply(e, DensityOperator(rho, (2,))).matrix @ u.conj().T
            assert np.max(np.abs(left - right)) < 1e-10


class TestApply:
    def test_identity_channel(self):
        rho = random_density((2, 2), rank=3, seed=2)
        assert np.allclose(apply(identity_channel(4), rho).matrix, rho.matrix)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension"):
            apply(identity_channel(2), random_density((2, 2), rank=1, seed=0))

    def test_pure_state_input(self):
        pair = tensor_power(depolarizing(0.5, 2), 2)
        out = apply(pair, max_entangled(2))
        assert out.dims == (2, 2)
        assert np.trace(out.matrix) == pytest.approx(1.0)

    @pytest.mark.parametrize("lam", [0.2, 0.7])
    @pytest.mark.parametrize("q0", [0.1, 0.5, 0.9])
    def test_depolarized_pair_matches_display(self, lam, q0):
        # the locally depolarized Schmidt pair in the computational basis
        q1 = 1 - q0
        lp, lm = 1 + lam, 1 - lam
        cross = lam * lam * np.sqrt(q0 * q1)
        expected = 0.25 * np.array(
            [
                [lm**2 + 4 * lam * q0, 0, 0, 4 * cross],
                [0, lp * lm, 0, 0],
                [0, 0, lp * lm, 0],
                [4 * cross, 0, 0, lm**2 + 4 * lam * q1],
            ]
        )
        pair = tensor_power(depolarizing(lam, 2), 2)
        got = apply(pair, schmidt_pure(q0)).matrix
        assert np.max(np.abs(got - expected)) < 1e-12

    def test_trace_and_positivity_preserved(self):
        # DensityOperator construction re-validates PSD and unit trace
        e = random_channel(4, seed=3)
        for seed in range(100):
            rho = random_density((2, 2), rank=2, seed=(4, seed))
            out = apply(e, rho)
            assert abs(np.trace(out.matrix) - 1.0) < 1e-10

    def test_choi_route_agrees(self):
        # independent application route through the Choi operator
        e = random_channel(3, seed=5)
        omega = choi_of(e)
        for seed in range(5):
            rho = random_density((3,), rank=2, seed=(6, seed)).matrix
            direct = sum(k @ rho @ k.conj().T for k in e.kraus)
            via_choi = apply_via_choi(omega, rho)
            assert np.max(np.abs(direct - via_choi)) < 1e-10


class TestTensor:
    def test_tensor_power_of_identity(self):
        e = tensor_power(identity_channel(2), 3)
        rho = random_density((2, 2, 2), rank=2, seed=7)
        assert np.allclose(apply(e, rho).matrix, rho.matrix)

    def test_pair_expansion(self):
        # E ox E output written through the input and its marginals
        lam = 0.45
        pair = tensor_power(depolarizing(lam, 2), 2)
        rho = random_density((2, 2), rank=3, seed=8)
        out = apply(pair, rho).matrix
        r1 = rho.marginal((0,)).matrix
        r2 = rho.marginal((1,)).matrix
        eye = np.eye(2) / 2
        expected = (
            lam**2 * rho.matrix
            + (1 - lam) ** 2 * np.eye(4) / 4
            + lam * (1 - lam) * (kron(r1, eye) + kron(eye, r2))
        )
        assert np.max(np.abs(out - expected)) < 1e-12

    def test_ghz_triple_expansion(self):
        # three-party expansion; the identity coefficient follows from the
        # marginal terms (each pair marginal of GHZ is the classically
        # correlated state, each single marginal is maximally mixed)
        lam = 0.37
        triple = tensor_power(depolarizing(lam, 2), 3)
        out = apply(triple, ghz(3)).matrix
        rho = ghz(3).density().matrix
        theta = classically_correlated_pair().matrix
        eye2 = np.eye(2, dtype=complex)
        eye8 = np.eye(8, dtype=complex)
        t12 = kron(theta, eye2)
        t23 = kron(eye2, theta)
        t13 = permute_factors(kron(theta, eye2), (2, 2, 2), (0, 2, 1))
        expected = (
            lam**3 * rho
            + (1 - lam) ** 2 * (1 + 2 * lam) / 8 * eye8
            + 0.5 * lam**2 * (1 - lam) * (t12 + t13 + t23)
        )
        assert np.max(np.abs(out - expected)) < 1e-12

    def test_choi_of_tensor_is_reordered_product(self):
        a = depolarizing(0.3, 2)
        b = random_channel(2, seed=9)
        joint = choi_of(tensor(a, b)).matrix
        product = kron(choi_of(a).matrix, choi_of(b).matrix)
        # product order (out_a, in_a, out_b, in_b) -> (out_a, out_b, in_a, in_b)
        reordered = permute_factors(product, (2, 2, 2, 2), (0, 2, 1, 3))
        assert np.max(np.abs(joint - reordered)) < 1e-12


class TestCompose:
    def test_identity_neutral(self):
        f = random_channel(2, seed=10)
        assert channels_equal(compose(identity_channel(2), f), f)
        assert channels_equal(compose(f, identity_channel(2)), f)

    def test_depolarizing_semigroup(self):
        # oracle: direct formula substitution on the matrix units
        a, b = 0.6, 0.7
        composed = compose(depolarizing(a, 2), depolarizing(b, 2))
        for i in range(2):
            for j in range(2):
                unit = basis_unit(i, j)
                got = sum(k @ unit @ k.conj().T for k in composed.kraus)
                expected = a * b * unit + (1 - a * b) * np.trace(unit) * np.eye(2) / 2
                assert np.max(np.abs(got - expected)) < 1e-12

    def test_trace_preservation_survives(self):
        e = compose(random_channel(2, seed=11), random_channel(2, seed=12))
        acc = sum(k.conj().T @ k for k in e.kraus)
        assert np.max(np.abs(acc - np.eye(2))) < 1e-10

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="compose"):
            compose(identity_channel(2), identity_channel(3))


class TestChoi:
    def test_identity_choi_is_max_entangled(self):
        assert np.allclose(choi_of(identity_channel(2)).matrix, max_entangled_projector(2))

    def test_contraction_choi_is_product_mixture(self):
        assert np.allclose(choi_of(depolarizing(0.0, 2)).matrix, np.eye(4) / 4)

    def test_choi_marginal_is_maximally_mixed(self):
        e = random_channel(3, seed=13)
        omega = choi_of(e)
        assert np.allclose(omega.marginal((1,)).matrix, np.eye(3) / 3, atol=1e-10)

    def test_round_trip_werner(self):
        omega = werner(0.4, 2)
        rebuilt = choi_of(channel_from_choi(omega))
        assert np.max(np.abs(rebuilt.matrix - omega.matrix)) < 1e-10

    @pytest.mark.parametrize("seed", [14, 15, 16])
    def test_round_trip_random(self, seed):
        e = random_channel(2, seed=seed)
        omega = choi_of(e)
        rebuilt = choi_of(channel_from_choi(omega))
        assert np.max(np.abs(rebuilt.matrix - omega.matrix)) < 1e-10

    def test_round_trip_named_channels(self):
        for e in (identity_channel(2), depolarizing(0.3, 2)):
            omega = choi_of(e)
            assert channels_equal(channel_from_choi(omega), e)

    def test_channel_from_max_entangled_is_identity(self):
        e = channel_from_choi(DensityOperator(max_entangled_projector(2), (2, 2)))
        assert channels_equal(e, identity_channel(2))

    def test_random_choi_reconstruction_gives_valid_outputs(self):
        e = channel_from_choi(choi_of(random_channel(2, seed=17)))
        for seed in range(5):
            rho = random_density((2,), rank=2, seed=(18, seed))
            out = apply(e, rho)
            assert abs(np.trace(out.matrix) - 1.0) < 1e-10

    def test_rejects_non_channel_choi(self):
        # valid state, but its output marginal is not maximally mixed
        skew = DensityOperator(np.diag([0.7, 0.1, 0.1, 0.1]), (2, 2))
        with pytest.raises(ValueError, match="not a channel"):
            channel_from_choi(skew)


class TestMeasurePrepare:
    def test_trivial_povm_gives_contraction(self):
        mp = MeasurePrepare(
            (np.eye(2),), (DensityOperator(np.eye(2) / 2, (2,)),)
        )
        assert channels_equal(measure_prepare_channel(mp), depolarizing(0.0, 2))

    def test_dephasing_choi_is_diagonal(self):
        # oracle: direct 4x4 construction, (1/2) sum_j rho_j ox F_j^T
        mp = MeasurePrepare(
            (np.diag([1.0, 0.0]), np.diag([0.0, 1.0])),
            (
                DensityOperator(np.diag([1.0, 0.0]), (2,)),
                DensityOperator(np.diag([0.0, 1.0]), (2,)),
            ),
        )
        omega = choi_of(measure_prepare_channel(mp))
        assert np.allclose(omega.matrix, np.diag([0.5, 0.0, 0.0, 0.5]))

    def test_constant_channel(self):
        target = random_density((2, 2), rank=2, seed=19)
        e = constant_channel(target)
        for seed in range(3):
            rho = random_density((2, 2), rank=3, seed=(20, seed))
            assert np.max(np.abs(apply(e, rho).matrix - target.matrix)) < 1e-10

    def test_povm_must_sum_to_identity(self):
        with pytest.raises(ValueError, match="sum to the identity"):
            MeasurePrepare(
                (np.diag([1.0, 0.0]),), (DensityOperator(np.eye(2) / 2, (2,)),)
            )

    def test_povm_must_be_positive(self):
        with pytest.raises(ValueError, match="positive semidefinite"):
            MeasurePrepare(
                (np.diag([1.5, 1.0]), np.diag([-0.5, 0.0])),
                (
                    DensityOperator(np.eye(2) / 2, (2,)),
                    DensityOperator(np.eye(2) / 2, (2,)),
                ),
            )


class TestRandomChannel:
    def test_determinism(self):
        a = random_channel(2, seed=21)
        b = random_channel(2, seed=21)
        assert channels_equal(a, b, atol=1e-14)

    def test_rectangular(self):
        e = random_channel(2, d_out=3, seed=22)
        assert (e.in_dim, e.out_dim) == (2, 3)
        out = apply(e, random_density((2,), rank=1, seed=23))
        assert out.dims == (3,)


class TestJsonSpecs:
    def test_matrix_round_trip(self):
        rng = np.random.default_rng(24)
        m = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        assert np.allclose(matrix_from_json(matrix_to_json(m)), m)

    def test_depolarizing_kind(self):
        e = channel_from_spec({"kind": "depolarizing", "lambda": 0.5, "d": 2})
        assert channels_equal(e, depolarizing(0.5, 2))

    def test_kraus_kind(self):
        ref = depolarizing(0.3, 2)
        spec = {"kind": "kraus", "ops": [matrix_to_json(k) for k in ref.kraus]}
        assert channels_equal(channel_from_spec(spec), ref)

    def test_choi_kind(self):
        ref = depolarizing(0.7, 2)
        spec = {
            "kind": "choi",
            "out_dim": 2,
            "in_dim": 2,
            "matrix": matrix_to_json(choi_of(ref).matrix),
        }
        assert channels_equal(channel_from_spec(spec), ref)

    def test_measure_prepare_kind(self):
        spec = {
            "kind": "measure_prepare",
            "povm": [matrix_to_json(np.eye(2))],
            "prepares": [matrix_to_json(np.eye(2) / 2)],
        }
        assert channels_equal(channel_from_spec(spec), depolarizing(0.0, 2))

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError, match="unknown channel kind"):
            channel_from_spec({"kind": "mystery"})

    def test_non_tp_kraus_rejected(self):
        spec = {"kind": "kraus", "ops": [matrix_to_json(np.eye(2) * 0.5)]}
        with pytest.raises(ValueError, match="trace preservation"):
            channel_from_spec(spec)

    def test_malformed_matrix_rejected(self):
        with pytest.raises(ValueError, match="matri"):
            channel_from_spec({"kind": "kraus", "ops": [[[1.0, 0.0], [0.0, 1.0]]]})

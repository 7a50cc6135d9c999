"""Tests for operator-Schmidt decomposition and local factorization."""

import numpy as np
import pytest

from entbasis import (
    SIGMA1,
    SIGMA3,
    check_preserves_max_entangled,
    factor_local,
    flip_operator,
    haar_unitary,
    operator_schmidt,
    tensor,
)

CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)


def _phase_aligned_distance(a, b):
    # distance up to a global phase, minimized analytically
    z = np.trace(a.conj().T @ b)
    phase = z / abs(z) if abs(z) > 0 else 1.0
    return np.linalg.norm(a * phase - b)


class TestOperatorSchmidt:
    def test_product_is_rank_one_with_coefficient_d(self):
        rng = np.random.default_rng(0)
        for d in (2, 3):
            u = tensor(haar_unitary(d, rng), haar_unitary(d, rng))
            s, _, _ = operator_schmidt(u)
            assert s[0] == pytest.approx(d, abs=1e-12)
            assert s[1] < 1e-12

    def test_flip_coefficients(self):
        s, _, _ = operator_schmidt(flip_operator(2))
        assert np.allclose(s, [1, 1, 1, 1], atol=1e-12)

    def test_cnot_rank_two(self):
        s, _, _ = operator_schmidt(CNOT)
        assert s[1] > 0.5
        assert s[2] < 1e-12

    def test_reconstruction_and_orthonormal_factors(self):
        rng = np.random.default_rng(1)
        u = haar_unitary(9, rng)
        s, left, right = operator_schmidt(u)
        rebuilt = sum(si * tensor(a, b) for si, a, b in zip(s, left, right))
        assert np.linalg.norm(rebuilt - u) < 1e-12
        for ops in (left, right):
            gram = np.array([[np.trace(a.conj().T @ b) for b in ops] for a in ops])
            assert np.allclose(gram, np.eye(len(ops)), atol=1e-12)

    @pytest.mark.parametrize("d", [2, 3])
    def test_sum_of_squares_is_d_squared(self, d):
        # sum_i s_i^2 = ||U||_F^2 = d^2 for any unitary on C^d tensor C^d
        rng = np.random.default_rng(2)
        u = haar_unitary(d * d, rng)
        s, _, _ = operator_schmidt(u)
        assert np.sum(s**2) == pytest.approx(d * d, rel=1e-12)

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            operator_schmidt(np.ones((4, 2)))
        with pytest.raises(ValueError):
            operator_schmidt(np.eye(6))


class TestFactorLocal:
    def test_sigma1_sigma3(self):
        result = factor_local(tensor(SIGMA1, SIGMA3))
        assert result.kind == "local"
        assert result.residual < 1e-12
        u1, u2 = result.factors
        assert np.linalg.norm(tensor(u1, u2) - tensor(SIGMA1, SIGMA3)) < 1e-12

    def test_flip_factors_to_identities(self):
        result = factor_local(flip_operator(2))
        assert result.kind == "local_flip"
        u1, u2 = result.factors
        assert _phase_aligned_distance(tensor(u1, u2), np.eye(4)) < 1e-12

    def test_cnot_neither(self):
        result = factor_local(CNOT)
        assert result.kind == "neither"
        assert result.factors is None
        assert result.residual > 0.5

    def test_phase_convention(self):
        rng = np.random.default_rng(3)
        u = tensor(haar_unitary(3, rng), haar_unitary(3, rng))
        result = factor_local(u)
        lead = result.factors[0].reshape(-1)
        lead = lead[np.abs(lead) > 1e-12][0]
        assert lead.imag == pytest.approx(0.0, abs=1e-12)
        assert lead.real > 0

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_round_trip_local_and_flip(self, d):
        rng = np.random.default_rng(d)
        f = flip_operator(d)
        for _ in range(25):
            v = haar_unitary(d, rng)
            w = haar_unitary(d, rng)
            u = tensor(v, w)
            res = factor_local(u)
            assert res.kind == "local"
            assert res.residual < 1e-8
            for got, want in zip(res.factors, (v, w)):
                assert _phase_aligned_distance(got, want) < 1e-8
            res = factor_local(u @ f)
            assert res.kind == "local_flip"
            assert res.residual < 1e-8

    def test_unitary_factors(self):
        rng = np.random.default_rng(4)
        u = tensor(haar_unitary(2, rng), haar_unitary(2, rng))
        res = factor_local(u)
        for x in res.factors:
            assert np.linalg.norm(x.conj().T @ x - np.eye(2)) < 1e-10

    def test_non_unitary_rejected(self):
        with pytest.raises(ValueError, match="unitary"):
            factor_local(np.diag([1.0, 2.0, 1.0, 1.0]).astype(complex))


class TestPreservesMaxEntangled:
    def test_local_unitary_clean(self):
        rng = np.random.default_rng(5)
        u = tensor(haar_unitary(2, rng), haar_unitary(2, rng))
        report = check_preserves_max_entangled(u, trials=500, seed=0)
        assert report.passed
        assert report.max_violation < 1e-10
        assert report.verdict == "no violation found"
        assert report.witnesses == ()

    def test_cnot_witness(self):
        report = check_preserves_max_entangled(CNOT, trials=100, seed=0)
        assert not report.passed
        assert report.max_violation > 0.1
        assert report.witnesses
        assert report.verdict == "violation witnessed"

    def test_flip_clean(self):
        report = check_preserves_max_entangled(flip_operator(3), trials=200, seed=1)
        assert report.passed
        assert report.max_violation < 1e-10

    def test_verdict_agreement_with_factor_local(self):
        # neither-verdicts and sampled violations must name the same inputs
        rng = np.random.default_rng(6)
        f = flip_operator(2)
        for t in range(500):
            if t % 5 == 0:
                u = tensor(haar_unitary(2, rng), haar_unitary(2, rng))
                if t % 10 == 0:
                    u = u @ f
            else:
                u = haar_unitary(4, rng)
            says_neither = factor_local(u, tol=1e-8).kind == "neither"
            witnessed = check_preserves_max_entangled(u, trials=40, seed=t).max_violation > 1e-6
            assert says_neither == witnessed

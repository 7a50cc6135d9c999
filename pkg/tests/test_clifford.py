"""Tests for Clifford generator construction and relation checking."""

import numpy as np
import pytest

from entbasis import PAULIS, SIGMA1, SIGMA2, build_clifford_generators, clifford_check


class TestCliffordCheck:
    def test_pauli_triple(self):
        report = clifford_check(list(PAULIS))
        assert report.passed
        assert report.details == {
            "count": 3,
            "dimension": 2,
            "expected_dimension": 2,
            "dimension_matches": True,
        }

    def test_duplicated_generator_fails(self):
        # delta_01 = 0 but the anticommutator is 2 sigma1^2 = 2I
        report = clifford_check([SIGMA1, SIGMA1])
        assert not report.passed
        assert report.max_violation == pytest.approx(2 * np.sqrt(2))
        pairs = [w["pair"] for w in report.witnesses]
        assert [0, 1] in pairs

    def test_non_hermitian_flagged(self):
        report = clifford_check([1j * SIGMA2])
        assert not report.passed
        kinds = {w["kind"] for w in report.witnesses}
        assert "hermiticity" in kinds

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            clifford_check([SIGMA1, np.eye(4)])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            clifford_check([])


class TestBuildGenerators:
    def test_base_case(self):
        gens = build_clifford_generators(1)
        assert len(gens) == 1
        assert np.array_equal(gens[0], [[1.0]])

    def test_three_generators_pauli_like(self):
        gens = build_clifford_generators(3)
        assert all(g.shape == (2, 2) for g in gens)
        report = clifford_check(gens)
        assert report.passed

    @pytest.mark.parametrize("n,dim", [(1, 1), (3, 2), (5, 4), (7, 8)])
    def test_dimension_formula(self, n, dim):
        gens = build_clifford_generators(n)
        assert len(gens) == n
        assert gens[0].shape == (dim, dim)
        report = clifford_check(gens)
        assert report.passed
        assert report.details["dimension_matches"]

    def test_generators_hermitian_unitary(self):
        for g in build_clifford_generators(5):
            assert np.allclose(g, g.conj().T, atol=1e-14)
            assert np.allclose(g @ g, np.eye(g.shape[0]), atol=1e-14)

    @pytest.mark.parametrize("n", [0, 2, 4, -1])
    def test_even_or_nonpositive_rejected(self, n):
        with pytest.raises(ValueError):
            build_clifford_generators(n)

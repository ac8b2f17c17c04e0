"""Tests for the unitary-orbit descent oracle and the structural helpers.

The manifold gradient is checked against central finite differences: for a
skew-Hermitian direction K the derivative of h(exp(eps K) Q) at eps = 0
must equal Re tr(G* K).  Verdicts are checked against the published
nilpotent table rows and their unitary conjugates.
"""

import numpy as np
import pytest

from uecsm.fixtures import TABLE2, TABLE3, family_member
from uecsm.oracle import (
    ORACLE_TOL,
    OracleOutcome,
    _expm_skew,
    _gradient,
    _objective,
    brute_force_uecsm,
    cartesian_parts,
    direct_sum_zero,
    nilpotent3_verdict,
    random_unitary,
    tener_applicable,
)


def random_skew(n, rng):
    x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    k = x - x.conj().T
    return k / np.linalg.norm(k)


class TestGradient:
    def test_matches_finite_differences(self):
        rng = np.random.default_rng(11)
        eps = 1e-5
        for trial in range(12):
            n = int(rng.integers(2, 6))
            t = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            q = random_unitary(n, rng)
            k = random_skew(n, rng)
            analytic = float(np.real(np.trace(_gradient(q, t).conj().T @ k)))
            fd = (_objective(_expm_skew(eps * k) @ q, t)
                  - _objective(_expm_skew(-eps * k) @ q, t)) / (2 * eps)
            assert analytic == pytest.approx(fd, rel=1e-6, abs=1e-10)

    def test_vanishes_on_real_orthogonal_locus(self):
        # For real T the real orthogonal matrices are a critical set; the
        # random complex restarts are what actually explore the orbit.
        rng = np.random.default_rng(12)
        t = rng.standard_normal((4, 4))
        g_id = _gradient(np.eye(4, dtype=complex), t)
        q, _ = np.linalg.qr(rng.standard_normal((4, 4)))
        g_q = _gradient(q.astype(complex), t)
        assert np.abs(g_id).max() < 1e-12
        assert np.abs(g_q).max() < 1e-12


class TestExpmSkew:
    def test_result_is_unitary(self):
        rng = np.random.default_rng(13)
        for n in (2, 3, 5):
            g = random_skew(n, rng)
            e = _expm_skew(g)
            np.testing.assert_allclose(e @ e.conj().T, np.eye(n), atol=1e-12)

    def test_small_argument_linearization(self):
        rng = np.random.default_rng(14)
        g = 1e-8 * random_skew(3, rng)
        np.testing.assert_allclose(_expm_skew(g), np.eye(3) + g, atol=1e-15)


class TestRandomUnitary:
    def test_unitary_and_deterministic(self):
        a = random_unitary(4, np.random.default_rng(15))
        b = random_unitary(4, np.random.default_rng(15))
        np.testing.assert_allclose(a @ a.conj().T, np.eye(4), atol=1e-12)
        assert np.array_equal(a, b)


class TestBruteForce:
    @pytest.mark.parametrize("fx", TABLE2, ids=lambda fx: fx.label)
    def test_nilpotent_table_rows(self, fx):
        verdict = brute_force_uecsm(fx.matrix(), restarts=16)
        expected = (OracleOutcome.UECSM if fx.oracle_expected
                    else OracleOutcome.NOT_UECSM)
        assert verdict.outcome is expected

    @pytest.mark.parametrize("fx", TABLE3, ids=lambda fx: fx.label)
    def test_repeated_spectrum_table_rows(self, fx):
        verdict = brute_force_uecsm(fx.matrix(), restarts=16)
        expected = (OracleOutcome.UECSM if fx.oracle_expected
                    else OracleOutcome.NOT_UECSM)
        assert verdict.outcome is expected

    def test_symmetric_input_certified_by_identity_start(self):
        rng = np.random.default_rng(16)
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        verdict = brute_force_uecsm(a + a.T, restarts=8)
        assert verdict.outcome is OracleOutcome.UECSM
        assert verdict.restarts_used == 1
        assert verdict.best_residual < 1e-14

    def test_trivial_inputs(self):
        assert brute_force_uecsm(np.zeros((3, 3))).outcome is OracleOutcome.UECSM
        assert brute_force_uecsm([[5 + 2j]]).outcome is OracleOutcome.UECSM

    def test_deterministic_for_seed(self):
        t = family_member(3)
        a = brute_force_uecsm(t, restarts=4, seed=5)
        b = brute_force_uecsm(t, restarts=4, seed=5)
        assert a == b

    def test_restart_budget_validated(self):
        with pytest.raises(ValueError):
            brute_force_uecsm(np.eye(2) + 0j, restarts=0)

    def test_residual_scale_invariance(self):
        # The reported residual is relative, so scaling T should not change
        # the verdict.
        t = TABLE2[1].matrix()
        small = brute_force_uecsm(t, restarts=8)
        big = brute_force_uecsm(1e6 * t, restarts=8)
        assert small.outcome is big.outcome is OracleOutcome.NOT_UECSM
        assert big.best_residual == pytest.approx(small.best_residual, rel=1e-3)


class TestNilpotent3:
    def test_published_pairs(self):
        assert nilpotent3_verdict(18, 18j) is True
        assert nilpotent3_verdict(18, 9j) is False

    def test_zero_product_always_yes(self):
        assert nilpotent3_verdict(0, 7) is True
        assert nilpotent3_verdict(7, 0) is True

    def test_equal_moduli_any_phase(self):
        assert nilpotent3_verdict(3, 3 * np.exp(1.3j)) is True
        assert nilpotent3_verdict(3, 3.1) is False


class TestDirectSumZero:
    def test_shape_and_content(self):
        t = family_member(5)
        out = direct_sum_zero(t, 2)
        assert out.shape == (5, 5)
        np.testing.assert_allclose(out[:3, :3], t)
        assert np.abs(out[3:, :]).max() == 0.0
        assert np.abs(out[:, 3:]).max() == 0.0

    def test_zero_block_preserves_membership(self):
        # Padding forces a repeated eigenvalue, so only the oracle can still
        # decide -- and it must agree with the unpadded verdict.
        yes = brute_force_uecsm(direct_sum_zero(family_member(5), 1),
                                restarts=16)
        no = brute_force_uecsm(direct_sum_zero(family_member(3), 1),
                               restarts=16)
        assert yes.outcome is OracleOutcome.UECSM
        assert no.outcome is OracleOutcome.NOT_UECSM

    def test_negative_padding_rejected(self):
        with pytest.raises(ValueError):
            direct_sum_zero(np.eye(2), -1)


class TestCartesianParts:
    def test_reassembly(self):
        rng = np.random.default_rng(17)
        t = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        herm, skew = cartesian_parts(t)
        np.testing.assert_allclose(herm, herm.conj().T, atol=1e-14)
        np.testing.assert_allclose(skew, skew.conj().T, atol=1e-14)
        np.testing.assert_allclose(herm + 1j * skew, t, atol=1e-14)

    def test_hermitian_part_spectrum_of_table_row(self):
        herm, _ = cartesian_parts(TABLE3[0].matrix())
        expected = sorted([0.0, 4.0, 4 * np.sqrt(2), -4 * np.sqrt(2)])
        np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(herm)),
                                   expected, atol=1e-12)


class TestTenerApplicable:
    @pytest.mark.parametrize("fx", TABLE2, ids=lambda fx: fx.label)
    def test_true_on_nilpotent_table(self, fx):
        applicable, reason = tener_applicable(fx.matrix())
        assert applicable is True
        assert reason

    @pytest.mark.parametrize("fx", TABLE3, ids=lambda fx: fx.label)
    def test_false_on_repeated_spectrum_table(self, fx):
        applicable, reason = tener_applicable(fx.matrix())
        assert applicable is False
        assert reason

    def test_real_diagonal_has_degenerate_skew_part(self):
        applicable, _ = tener_applicable(np.diag([1.0, 2.0, 3.0]))
        assert applicable is False

    def test_scalar_is_vacuously_applicable(self):
        applicable, _ = tener_applicable([[3.0 + 1j]])
        assert applicable is True

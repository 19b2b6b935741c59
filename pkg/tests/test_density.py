import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermitrap import (DegeneratePointError, InvalidKernelError, InvalidStateError,
                       PairKernels, TrapConfiguration, TwoSpinDensityMatrix, pair_kernels,
                       rho_bcs, rho_even, rho_odd, rho_trap, wootters_concurrence)
from fermitrap.density import BCS_BASIS, maximally_mixed, singlet
from fermitrap.oracle import fock_rho

SINGLET = np.array([[0, 0, 0, 0], [0, 0.5, -0.5, 0], [0, -0.5, 0.5, 0], [0, 0, 0, 0]])


def test_coincidence_gives_singlet():
    rho = rho_even(pair_kernels(20, 0.7, 0.7))
    np.testing.assert_allclose(rho.matrix, SINGLET, atol=1e-15)


def test_zero_overlap_is_maximally_mixed():
    rho = rho_even(PairKernels(0.0, 1.0, 1.0))
    np.testing.assert_array_equal(rho.matrix, np.eye(4) / 4)


def test_even_matches_oracle():
    closed = rho_even(pair_kernels(20, 0.5, 1.5))
    # M = 10 is beyond the oracle; check its M = 4 analogue and the algebra at M = 10
    np.testing.assert_allclose(rho_even(pair_kernels(8, 0.5, 1.5)).matrix,
                               fock_rho(8, 0.5, 1.5).rho.matrix, atol=1e-10)
    k = pair_kernels(20, 0.5, 1.5)
    nn, f2 = k.N_x * k.N_xp, k.F ** 2
    norm = 4 * nn - 2 * f2
    assert closed.matrix[0, 0] == pytest.approx((nn - f2) / norm, rel=1e-14)
    assert closed.matrix[1, 1] == pytest.approx(nn / norm, rel=1e-14)
    assert closed.matrix[1, 2] == pytest.approx(-f2 / norm, rel=1e-14)


def test_even_invariants_on_grid():
    g = np.linspace(-4, 4, 17)
    for n in (2, 6, 20, 40):
        for x in g:
            for xp in g:
                rho = rho_even(pair_kernels(n, x, xp))
                assert rho.is_x_state()
                assert rho.is_spin_symmetric()
                assert rho.min_eigenvalue() >= -1e-12
                np.testing.assert_array_equal(rho.swapped().matrix, rho.matrix)


def test_degenerate_point():
    with pytest.raises(DegeneratePointError):
        rho_even(PairKernels(0.0, 0.0, 0.0))
    with pytest.raises(DegeneratePointError):
        rho_even(pair_kernels(4, 30.0, 30.0))


def test_odd_near_singlet_at_coincidence():
    c = wootters_concurrence(rho_odd(21, 0.5, 0.5))
    assert 0.95 < c <= 1.0


def test_odd_at_origin_is_even_singlet():
    np.testing.assert_allclose(rho_odd(3, 0.0, 0.0).matrix,
                               rho_even(pair_kernels(2, 0.0, 0.0)).matrix, atol=1e-16)
    np.testing.assert_allclose(rho_odd(3, 0.0, 0.0).matrix, SINGLET, atol=1e-15)


def test_odd_close_to_even_for_large_n():
    g = np.linspace(-2, 2, 11)
    worst = max(abs(wootters_concurrence(rho_odd(21, x, xp))
                    - wootters_concurrence(rho_even(pair_kernels(20, x, xp))))
                for x in g for xp in g)
    assert worst < 0.1


def test_odd_is_valid_state():
    for x, xp in [(0.1, 0.4), (-1.0, 1.3), (2.0, 2.2)]:
        rho = rho_odd(7, x, xp)
        assert abs(np.trace(rho.matrix) - 1) < 1e-12
        assert rho.min_eigenvalue() >= -1e-12
        assert rho.is_x_state()


@pytest.mark.parametrize("n", [3, 5, 9, 21])
def test_odd_concurrence_independent_of_extra_spin(n):
    for x, xp in [(0.2, 0.5), (-0.7, 0.1), (1.5, 1.9)]:
        up = rho_odd(TrapConfiguration(n, "up"), x, xp)
        down = rho_odd(TrapConfiguration(n, "down"), x, xp)
        assert wootters_concurrence(up) == pytest.approx(wootters_concurrence(down), abs=1e-12)


def test_rho_trap_dispatches_on_parity():
    np.testing.assert_array_equal(rho_trap(5, 0.2, 0.6).matrix, rho_odd(5, 0.2, 0.6).matrix)
    np.testing.assert_array_equal(rho_trap(4, 0.2, 0.6).matrix,
                                  rho_even(pair_kernels(4, 0.2, 0.6)).matrix)


def test_bcs_special_cases():
    np.testing.assert_allclose(rho_bcs(1.0, 1.0).matrix, SINGLET, atol=1e-16)
    np.testing.assert_allclose(rho_bcs(1.0, 0.0).matrix, np.eye(4) / 4, atol=1e-16)
    assert rho_bcs(1.0, 0.0).basis == BCS_BASIS


def test_bcs_uniform_overlap_maximum():
    Q, M = 4.0, 8
    rho = rho_bcs(Q, M * Q * (Q / M))
    assert wootters_concurrence(rho) == pytest.approx(1.0, abs=1e-12)


def test_bcs_rejects_bad_kernels():
    with pytest.raises(InvalidKernelError):
        rho_bcs(1.0, 1.5)
    with pytest.raises(DegeneratePointError):
        rho_bcs(1.0, 2.0)
    with pytest.raises(DegeneratePointError):
        rho_bcs(0.0, 0.0)


def test_state_validation():
    with pytest.raises(InvalidStateError):
        TwoSpinDensityMatrix(np.eye(4))
    with pytest.raises(InvalidStateError):
        TwoSpinDensityMatrix(np.diag([0.6, 0.6, -0.1, -0.1]))
    with pytest.raises(InvalidStateError):
        TwoSpinDensityMatrix(np.eye(3) / 3)
    asym = np.eye(4) / 4
    asym[0, 1] = 0.1
    with pytest.raises(InvalidStateError):
        TwoSpinDensityMatrix(asym)


def test_named_states():
    np.testing.assert_array_equal(singlet().matrix, SINGLET)
    np.testing.assert_array_equal(maximally_mixed().matrix, np.eye(4) / 4)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 50), st.floats(-4, 4))
def test_coincidence_concurrence_is_one(M, x):
    assert wootters_concurrence(rho_even(pair_kernels(2 * M, x, x))) == pytest.approx(1.0, abs=1e-12)

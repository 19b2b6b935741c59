import math

import numpy as np
import pytest

from fermitrap import (DegenerateLevelError, DomainError, bcs_kernels, bogoliubov,
                       build_levels, build_model, eval_mode, solve_gap,
                       uniform_overlap_threshold, concurrence_bcs_uniform)
from fermitrap.bcs import gap_residual

from conftest import hermite_function


def test_levels():
    np.testing.assert_array_equal(build_levels(2, 1.0), [-0.5, 0.5])
    np.testing.assert_array_equal(build_levels(5, 2.0), [-4, -2, 0, 2, 4])


@pytest.mark.parametrize("M", range(2, 51))
def test_level_spacing(M):
    levels = build_levels(M, 0.7)
    np.testing.assert_allclose(np.diff(levels), 0.7, rtol=1e-12)
    assert levels.sum() == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("M,d", [(0, 1.0), (2, 0.0), (2, -1.0), (1.5, 1.0)])
def test_levels_reject(M, d):
    with pytest.raises(DomainError):
        build_levels(M, d)


def test_weak_coupling_gap_vanishes():
    assert solve_gap(build_levels(2, 1.0), 1e-4, 1.0) < 1e-3


def test_two_level_closed_form():
    delta = solve_gap(build_levels(2, 1.0), 1.0, 1.0)
    assert delta == pytest.approx(math.sqrt(0.75), abs=1e-10)


@pytest.mark.parametrize("lam,d", [(0.8, 1.0), (1.5, 0.5), (3.0, 2.0)])
def test_two_level_general(lam, d):
    delta = solve_gap(build_levels(2, d), lam, d)
    assert delta == pytest.approx(math.sqrt(lam ** 2 * d ** 2 - d ** 2 / 4), abs=1e-10)


@pytest.mark.parametrize("M", [4, 8, 16])
@pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
def test_gap_residual(M, lam):
    levels = build_levels(M, 1.0)
    delta = solve_gap(levels, lam, 1.0)
    assert delta > 0
    assert abs(gap_residual(levels, lam, 1.0, delta)) < 1e-10


def test_odd_ladder_always_gapped():
    # a level at zero energy makes the sum diverge as the gap closes
    assert solve_gap(build_levels(5, 1.0), 1e-3, 1.0) > 0


def test_gap_monotone_in_coupling():
    for M in (2, 5, 8):
        deltas = [solve_gap(build_levels(M, 1.0), lam, 1.0) for lam in np.arange(1, 11) * 0.2]
        assert all(b >= a for a, b in zip(deltas, deltas[1:]))


def test_gap_rejects():
    with pytest.raises(DomainError):
        solve_gap(build_levels(2, 1.0), 0.0, 1.0)
    with pytest.raises(DomainError):
        solve_gap(build_levels(2, 1.0), 1.0, 1.0, tol=0.0)


@pytest.mark.parametrize("M", [2, 3, 8, 9, 20])
def test_half_filling(M):
    model = build_model(M, 1.0, 1.0)
    assert model.Q == pytest.approx(M / 2, abs=1e-12)


def test_bogoliubov_identities():
    model = build_model(8, 1.0, 1.0)
    u2, v2 = model.u ** 2, model.v2
    np.testing.assert_allclose(u2 + v2, 1.0, atol=1e-12)
    target = model.delta ** 2 / (model.levels ** 2 + model.delta ** 2)
    np.testing.assert_allclose(4 * u2 * v2, target, atol=1e-12)
    assert np.all(model.u >= 0) and np.all(model.v >= 0)


def test_bogoliubov_limits():
    u, v, _ = bogoliubov(np.array([-1e6, 1e6]), 1.0)
    assert v[0] ** 2 == pytest.approx(1.0, abs=1e-12)
    assert v[1] ** 2 == pytest.approx(0.0, abs=1e-12)
    assert v[1] ** 2 > 0


def test_bogoliubov_zero_gap():
    u, v, Q = bogoliubov(build_levels(4, 1.0), 0.0)
    np.testing.assert_array_equal(v ** 2, [1, 1, 0, 0])
    assert Q == 2
    with pytest.raises(DegenerateLevelError):
        bogoliubov(build_levels(3, 1.0), 0.0)
    with pytest.raises(DomainError):
        bogoliubov(build_levels(2, 1.0), -1.0)


def test_kernels_full_occupation():
    model = build_model(6, 1.0, 1.0)
    k = bcs_kernels(model, 0.3, -0.8, v2=np.ones(6))
    assert k.v2 == k.f


def test_kernels_single_level():
    model = build_model(1, 1.0, 1.0)
    k = bcs_kernels(model, 0.4, 0.4)
    phi = eval_mode(0, 0.4)
    assert k.f == pytest.approx(phi ** 2, rel=1e-15)
    assert k.v2 == pytest.approx(model.v2[0] * phi ** 2, rel=1e-15)


def test_kernels_term_by_term():
    model = build_model(8, 1.0, 1.0)
    k = bcs_kernels(model, 0.3, 0.7)
    prods = [float(hermite_function(n, 0.3) * hermite_function(n, 0.7)) for n in range(8)]
    assert k.f == pytest.approx(sum(prods), abs=1e-12)
    assert k.v2 == pytest.approx(sum(w * p for w, p in zip(model.v2, prods)), abs=1e-12)
    assert k.re_fv2 == k.f * k.v2


def test_kernels_custom_mode_map():
    model = build_model(3, 1.0, 1.0)
    k = bcs_kernels(model, 0.2, 0.5, mode_map=[0, 2, 4])
    expected = sum(eval_mode(n, 0.2) * eval_mode(n, 0.5) for n in (0, 2, 4))
    assert k.f == pytest.approx(expected, rel=1e-14)
    assert bcs_kernels(model, 0.2, 0.5, mode_map=[0, 1, 2]).f == pytest.approx(
        bcs_kernels(model, 0.2, 0.5).f, rel=1e-15)
    with pytest.raises(DomainError):
        bcs_kernels(model, 0.2, 0.5, mode_map=[0, 1])


def test_thresholds():
    assert uniform_overlap_threshold(4, 4) == pytest.approx((1 / math.sqrt(2), 1.0))
    assert uniform_overlap_threshold(2, 4) == pytest.approx((0.5, 1 / math.sqrt(2)))
    y0, ym = uniform_overlap_threshold(4, 8)
    assert concurrence_bcs_uniform(y0 ** 2, 4, 8) == pytest.approx(0.0, abs=1e-15)
    assert concurrence_bcs_uniform(ym ** 2, 4, 8) == pytest.approx(1.0, abs=1e-15)
    for M in range(1, 20):
        for Q in np.linspace(0.05, M, 7):
            assert uniform_overlap_threshold(Q, M)[0] <= 1 / math.sqrt(2) + 1e-15
    with pytest.raises(DomainError):
        uniform_overlap_threshold(0, 4)


def test_threshold_single_sign_flip():
    Q, M = 4.0, 8
    ys = np.linspace(0, 2 * Q / M, 400, endpoint=False)
    positive = [concurrence_bcs_uniform(y2, Q, M) > 0 for y2 in ys]
    flips = sum(a != b for a, b in zip(positive, positive[1:]))
    assert flips == 1
    i = positive.index(True)
    assert ys[i - 1] <= Q / (2 * M) < ys[i]


def test_harmonic_overlaps_never_reach_full_filling_threshold():
    # at Q/M = 1 the zero-concurrence overlap is 1/sqrt(2); harmonic modes stay below it
    y_zero, _ = uniform_overlap_threshold(8, 8)
    grid = np.linspace(-10, 10, 401)
    for n in range(0, 51, 5):
        phi = np.array([eval_mode(n, x) for x in grid])
        assert np.max(np.abs(np.outer(phi, phi))) < y_zero


def test_model_is_immutable():
    model = build_model(4, 1.0, 1.0)
    with pytest.raises(ValueError):
        model.v[0] = 0.0

import numpy as np
import pytest

from fermitrap import _backend

needs_compiled = pytest.mark.skipif("compiled" not in _backend.BACKENDS,
                                    reason="compiled kernels not built")


@needs_compiled
def test_ladders_agree():
    x = np.linspace(-15.0, 15.0, 301)
    a = _backend.ladder(120, x, backend="compiled")
    b = _backend.ladder(120, x, backend="python")
    np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-14)


@needs_compiled
@pytest.mark.parametrize("n_modes", [1, 2, 10, 40])
def test_overlap_sums_agree(n_modes):
    rng = np.random.default_rng(7)
    x = rng.uniform(-6, 6, 500)
    xp = rng.uniform(-6, 6, 500)
    w = rng.uniform(0, 1, n_modes)
    for a, b in zip(_backend.overlap_sums(n_modes, x, xp, w, backend="compiled"),
                    _backend.overlap_sums(n_modes, x, xp, w, backend="python")):
        np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-14)


def test_overlap_sums_match_ladder(backend):
    x = np.array([-1.3, 0.0, 0.4, 2.2])
    xp = np.array([0.7, 0.0, -2.5, 2.2])
    w = np.linspace(0.1, 1.0, 9)
    F, nx, nxp, fw = _backend.overlap_sums(9, x, xp, w)
    a = _backend.ladder(8, x)
    b = _backend.ladder(8, xp)
    np.testing.assert_allclose(F, np.sum(a * b, axis=0), rtol=1e-14)
    np.testing.assert_allclose(nx, np.sum(a * a, axis=0), rtol=1e-14)
    np.testing.assert_allclose(nxp, np.sum(b * b, axis=0), rtol=1e-14)
    np.testing.assert_allclose(fw, np.sum(w[:, None] * a * b, axis=0), rtol=1e-14)


def test_broadcasting_keeps_shape(backend):
    F, nx, nxp, fw = _backend.overlap_sums(3, np.zeros((2, 3)), 0.5)
    assert F.shape == nx.shape == nxp.shape == fw.shape == (2, 3)


def test_select_rejects_unknown():
    with pytest.raises(ValueError):
        _backend.select("fortran")


def test_weights_length_checked():
    with pytest.raises(ValueError):
        _backend.overlap_sums(4, 0.0, 0.0, weights=[1.0, 1.0])


def test_benchmark_script_runs(capsys):
    import runpy
    from pathlib import Path

    script = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    runpy.run_path(str(script), run_name="bench")["main"](["--repeat", "1"])
    out = capsys.readouterr().out
    assert "overlap_sums M=10, 81x81" in out

import numpy as np


def random_x_state(rng, real=False):
    """Random valid X-state: diagonal a_i >= 0, coherences within sqrt(a_i a_j)."""
    a = rng.uniform(0.0, 1.0, 4)
    phase = (lambda: 1.0) if real else (lambda: np.exp(2j * np.pi * rng.uniform()))
    z = rng.uniform() * np.sqrt(a[1] * a[2]) * phase()
    w = rng.uniform() * np.sqrt(a[0] * a[3]) * phase()
    m = np.diag(a).astype(complex)
    m[1, 2], m[2, 1] = z, np.conj(z)
    m[0, 3], m[3, 0] = w, np.conj(w)
    return m / a.sum()


def x_state_concurrence(m):
    """2 max(|z| - sqrt(a1 a4), |w| - sqrt(a2 a3), 0) for an X-state."""
    m = np.asarray(m)
    inner = abs(m[1, 2]) - np.sqrt(m[0, 0].real * m[3, 3].real)
    outer = abs(m[0, 3]) - np.sqrt(m[1, 1].real * m[2, 2].real)
    return 2.0 * max(inner, outer, 0.0)

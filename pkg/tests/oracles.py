"""Independent reference computations used only by the tests.

Nothing here imports the library's numerical code: formulas are typed
in directly from their definitions so that agreement is evidence, not
tautology.
"""

import numpy as np


def raw_step(kind: str, alpha: complex, beta: complex, zp: complex, zc: complex) -> complex:
    """z_{n+1} from (z_{n-1}, z_n) = (zp, zc), typed in from the equations."""
    if kind == "E1":
        return alpha / zc + beta / zp
    if kind == "E8":
        return alpha + beta * zc / zp
    if kind == "E9":
        return alpha * zp / zc + beta
    raise ValueError(kind)


def raw_orbit(kind, alpha, beta, zp, zc, n):
    out = []
    for _ in range(n):
        zp, zc = zc, raw_step(kind, alpha, beta, zp, zc)
        out.append(zc)
    return np.array(out)


def fd_jacobian(kind, alpha, beta, zp, zc, h=1e-6):
    """Companion-form Jacobian by central complex differences."""
    d_prev = (raw_step(kind, alpha, beta, zp + h, zc) - raw_step(kind, alpha, beta, zp - h, zc)) / (2 * h)
    d_curr = (raw_step(kind, alpha, beta, zp, zc + h) - raw_step(kind, alpha, beta, zp, zc - h)) / (2 * h)
    return np.array([[0, 1], [d_prev, d_curr]], dtype=complex)


def fd_monodromy(kind, alpha, beta, points, h=1e-7):
    """Derivative of the d-fold composed companion map at a cycle, by differences.

    The cycle ``points`` is z_0 .. z_{d-1}; the base state is
    (z_{d-2}, z_{d-1}) and the map is applied d times.
    """
    z = list(points)
    d = len(z)
    base = (z[d - 2], z[d - 1]) if d >= 2 else (z[0], z[0])

    def flow(zp, zc):
        for _ in range(d):
            zp, zc = zc, raw_step(kind, alpha, beta, zp, zc)
        return np.array([zp, zc])

    cols = []
    for e in ((h, 0), (0, h)):
        plus = flow(base[0] + e[0], base[1] + e[1])
        minus = flow(base[0] - e[0], base[1] - e[1])
        cols.append((plus - minus) / (2 * h))
    return np.column_stack(cols)


def quadratic_roots(a1, a0):
    """Roots of l^2 + a1 l + a0 from numpy's companion-matrix solver."""
    return np.roots([1, a1, a0])


def dense_scan_largest_root(f, lo, hi, n=2_000_001):
    """Largest sign change of ``f`` on a uniform grid, refined by the secant midpoint."""
    x = np.linspace(lo, hi, n)
    y = f(x)
    idx = np.flatnonzero(np.sign(y[:-1]) != np.sign(y[1:]))
    if idx.size == 0:
        return None
    i = idx[-1]
    return float(x[i] - y[i] * (x[i + 1] - x[i]) / (y[i + 1] - y[i]))


def uniform_square(n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.random(n) + 1j * rng.random(n)

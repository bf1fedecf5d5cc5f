"""Hot numeric kernels.

The proximal-gradient loop below dominates session runtime, so it is
JIT-compiled with numba when available.  Set ``LLMKEY_NUMBA=0`` to force the
pure-numpy build of the same function (identical results, useful for
debugging and for the benchmark in ``benchmarks/bench_solver.py``).
"""

import math
import os

import numpy as np


def _numba_requested() -> bool:
    return os.environ.get("LLMKEY_NUMBA", "1").strip().lower() not in (
        "0",
        "false",
        "off",
        "no",
    )


def _fista(A, At, y, lam, weight, x0, max_iters, tol, step0, backtracking):
    """Monotone accelerated proximal gradient for

        F(x) = 0.5 * weight * ||A x - y||_2^2 + lam * ||x||_1

    Accepts a candidate only if it does not increase F; on rejection the
    momentum is restarted from the current iterate.  An ISTA step taken
    right after a restart can fail to descend only at a fixed point (up to
    float rounding), so a second consecutive rejection terminates.

    Returns (x, objective_history, step_history, iterations, converged).
    """
    x_cur = x0.copy()
    yv = x0.copy()
    t = 1.0
    r0 = np.dot(A, x_cur) - y
    fx = 0.5 * weight * np.dot(r0, r0) + lam * np.abs(x_cur).sum()
    hist = np.empty(max_iters + 1)
    steps = np.empty(max_iters + 1)
    hist[0] = fx
    steps[0] = step0
    converged = False
    restarted = False
    k = 0
    for k in range(1, max_iters + 1):
        r = np.dot(A, yv) - y
        grad = weight * np.dot(At, r)
        step = step0
        z = yv - step * grad
        z = np.sign(z) * np.maximum(np.abs(z) - step * lam, 0.0)
        if backtracking:
            fy_s = 0.5 * weight * np.dot(r, r)
            for _ in range(60):
                rz = np.dot(A, z) - y
                fz_s = 0.5 * weight * np.dot(rz, rz)
                d = z - yv
                quad = fy_s + np.dot(grad, d) + np.dot(d, d) / (2.0 * step)
                if fz_s <= quad + 1e-12:
                    break
                step *= 0.5
                z = yv - step * grad
                z = np.sign(z) * np.maximum(np.abs(z) - step * lam, 0.0)
        rz = np.dot(A, z) - y
        fz = 0.5 * weight * np.dot(rz, rz) + lam * np.abs(z).sum()
        if fz <= fx:
            rel = (fx - fz) / max(1.0, abs(fx))
            tn = 0.5 * (1.0 + math.sqrt(1.0 + 4.0 * t * t))
            yv = z + ((t - 1.0) / tn) * (z - x_cur)
            x_cur = z
            fx = fz
            t = tn
            restarted = False
            hist[k] = fx
            steps[k] = step
            if rel < tol:
                converged = True
                break
        else:
            hist[k] = fx
            steps[k] = step
            if restarted:
                converged = True
                break
            t = 1.0
            yv = x_cur.copy()
            restarted = True
    return x_cur, hist[: k + 1], steps[: k + 1], k, converged


fista_numpy = _fista

try:
    from numba import njit

    fista_numba = njit(cache=True)(_fista)
    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised via LLMKEY_NUMBA=0 instead
    fista_numba = None
    NUMBA_AVAILABLE = False

NUMBA_ENABLED = NUMBA_AVAILABLE and _numba_requested()

fista = fista_numba if NUMBA_ENABLED else fista_numpy

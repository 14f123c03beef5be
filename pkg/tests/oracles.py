"""Independent reference implementations used only as test oracles.

Nothing here may import the code paths it is meant to check; each oracle is
a from-first-principles implementation (rotation matrices, brute-force sums,
finite differences) kept deliberately separate from the package.
"""

from __future__ import annotations

import numpy as np


def quat_to_matrix(q) -> np.ndarray:
    """3x3 rotation matrix from a unit (w, x, y, z) quaternion."""
    w, x, y, z = q
    return np.array(
        [
            [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
            [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
            [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
        ],
        dtype=float,
    )


def matrix_to_quat(m: np.ndarray) -> np.ndarray:
    """Shepperd's method; returns (w, x, y, z) with w >= 0."""
    t = np.trace(m)
    if t > 0:
        s = np.sqrt(t + 1.0) * 2.0
        w = 0.25 * s
        x = (m[2, 1] - m[1, 2]) / s
        y = (m[0, 2] - m[2, 0]) / s
        z = (m[1, 0] - m[0, 1]) / s
    elif m[0, 0] > m[1, 1] and m[0, 0] > m[2, 2]:
        s = np.sqrt(1.0 + m[0, 0] - m[1, 1] - m[2, 2]) * 2.0
        w = (m[2, 1] - m[1, 2]) / s
        x = 0.25 * s
        y = (m[0, 1] + m[1, 0]) / s
        z = (m[0, 2] + m[2, 0]) / s
    elif m[1, 1] > m[2, 2]:
        s = np.sqrt(1.0 + m[1, 1] - m[0, 0] - m[2, 2]) * 2.0
        w = (m[0, 2] - m[2, 0]) / s
        x = (m[0, 1] + m[1, 0]) / s
        y = 0.25 * s
        z = (m[1, 2] + m[2, 1]) / s
    else:
        s = np.sqrt(1.0 + m[2, 2] - m[0, 0] - m[1, 1]) * 2.0
        w = (m[1, 0] - m[0, 1]) / s
        x = (m[0, 2] + m[2, 0]) / s
        y = (m[1, 2] + m[2, 1]) / s
        z = 0.25 * s
    q = np.array([w, x, y, z])
    if q[0] < 0:
        q = -q
    return q / np.linalg.norm(q)


def random_unit_quat(rng: np.random.Generator) -> tuple[float, float, float, float]:
    v = rng.normal(size=4)
    v /= np.linalg.norm(v)
    return tuple(v)


def average_quat_eigen(qs) -> np.ndarray:
    """Rotation average via the dominant eigenvector of sum(q q^T)."""
    m = np.zeros((4, 4))
    for q in qs:
        v = np.asarray(q, dtype=float).reshape(4, 1)
        m += v @ v.T
    vals, vecs = np.linalg.eigh(m)
    v = vecs[:, np.argmax(vals)]
    return v / np.linalg.norm(v)


def gae_brute_force(rewards, values, dones, gamma, lam, last_value=0.0):
    """Direct evaluation of the exponentially weighted advantage sum."""
    n = len(rewards)
    deltas = np.empty(n)
    for t in range(n):
        if dones[t]:
            next_v = 0.0
        elif t + 1 < n:
            next_v = values[t + 1]
        else:
            next_v = last_value
        deltas[t] = rewards[t] + gamma * next_v - values[t]
    adv = np.zeros(n)
    for t in range(n):
        acc = 0.0
        coef = 1.0
        for l in range(t, n):
            acc += coef * deltas[l]
            if dones[l]:
                break
            coef *= gamma * lam
        adv[t] = acc
    return adv, adv + np.asarray(values, dtype=float)


def mlp_eval_straightline(weights, biases, x):
    """Evaluate tanh-hidden/linear-output MLP with explicit per-unit loops."""
    h = list(np.asarray(x, dtype=float))
    n_layers = len(weights)
    for li, (w, b) in enumerate(zip(weights, biases)):
        out = []
        for j in range(w.shape[1]):
            acc = float(b[j])
            for i in range(w.shape[0]):
                acc += float(h[i]) * float(w[i, j])
            out.append(acc)
        if li < n_layers - 1:
            out = [float(np.tanh(v)) for v in out]
        h = out
    return np.array(h)


def finite_diff_grad(f, x0: np.ndarray, h: float = 1e-5) -> np.ndarray:
    """Central finite differences of a scalar function of a flat vector."""
    g = np.zeros_like(x0)
    for i in range(x0.size):
        xp = x0.copy()
        xm = x0.copy()
        xp[i] += h
        xm[i] -= h
        g[i] = (f(xp) - f(xm)) / (2.0 * h)
    return g

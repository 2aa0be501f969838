"""Shared oracles for the test suite.

The maximal-operator oracle deliberately shares the library's weight table
and prefix-sum arrays (same float formula) while enumerating candidate
intervals by brute force per point, so agreement is exact, not approximate.
"""

from __future__ import annotations

import numpy as np

from varseq.lattice import Sequence, ZInterval
from varseq.maximal import alpha_weights


def rectangle_values(a: Sequence, alpha: float) -> tuple[ZInterval, np.ndarray]:
    """Matrix V[lo, hi] of |I|^(alpha-1) * sum_I |a| over hull subintervals.

    Rows use the identical expression the library evaluates, so entries are
    bit-for-bit the same floats.
    """
    hull = a.support_hull()
    vals = a.values[hull.lo - a.offset : hull.hi - a.offset + 1]
    P = np.concatenate([[0.0], np.cumsum(vals)])
    W = vals.size
    w_all = alpha_weights(W, alpha)
    V = np.full((W, W), -np.inf)
    for lo in range(W):
        V[lo, lo:] = w_all[: W - lo] * (P[lo + 1 :] - P[lo])
    return hull, V


def brute_force_profile(a: Sequence, alpha: float, window: ZInterval) -> np.ndarray:
    """Per-point rectangle maximum of the candidate-interval values.

    Inside the hull: max over the explicit V[lo<=n, hi>=n] rectangle.
    Outside: intervals from the point to each hull index, weights looked up
    in the shared table exactly as the library's side evaluation does.
    """
    hull, V = rectangle_values(a, alpha)
    vals = a.values[hull.lo - a.offset : hull.hi - a.offset + 1]
    P = np.concatenate([[0.0], np.cumsum(vals)])
    W = vals.size
    x = np.arange(W) + hull.lo
    out = np.zeros(window.hi - window.lo + 1)
    for i, n in enumerate(range(window.lo, window.hi + 1)):
        if hull.contains(n):
            k = n - hull.lo
            out[i] = V[: k + 1, k:].max()
        elif n < hull.lo:
            lengths = x - n + 1
            w = alpha_weights(int(lengths.max()), alpha)[lengths - 1]
            out[i] = (w * P[1:]).max()
        else:
            lengths = n - x + 1
            w = alpha_weights(int(lengths.max()), alpha)[lengths - 1]
            out[i] = (w * (P[-1] - P[:W])).max()
    return out


def constant_norm_oracle(a: Sequence, p0: float) -> float:
    """(sum |a|^p0)^(1/p0), the closed form for constant exponents."""
    if a.values.size == 0:
        return 0.0
    return float(np.power(a.values, p0).sum() ** (1.0 / p0))

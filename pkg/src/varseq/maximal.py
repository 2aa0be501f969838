"""Fractional maximal operator M_alpha on finitely supported sequences.

M_alpha a(n) = sup over intervals I containing n of |I|^(alpha-1) sum_I |a|.
The sup is attained on intervals with endpoints in the support hull, so the
profile over the hull is a finite max (computed by two cumulative-max sweeps)
and values outside the hull decay strictly, which lets superlevel sets be
returned as interval runs without enumerating large radii.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .lattice import Sequence, ZInterval, runs_normalize

__all__ = [
    "MaximalProfile",
    "MaximalEvaluator",
    "alpha_weights",
    "m_alpha_point",
    "m_alpha_profile",
    "superlevel_set",
]

RADIUS_LIMIT = 2**52
_WEIGHT_TABLE_LIMIT = 2**20


@lru_cache(maxsize=16)
def _weights_cached(max_len: int, alpha: float) -> np.ndarray:
    w = np.power(np.arange(1, max_len + 1, dtype=np.float64), alpha - 1.0)
    w.flags.writeable = False
    return w


def alpha_weights(max_len: int, alpha: float) -> np.ndarray:
    """Read-only table of |I|^(alpha-1) for lengths 1..max_len."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    return _weights_cached(int(max_len), float(alpha))


def _validate_alpha(alpha: float) -> float:
    if not (0.0 <= alpha < 1.0):
        raise ValueError("alpha must lie in [0, 1)")
    return float(alpha)


@dataclass(frozen=True)
class MaximalProfile:
    """Values of M_alpha a on a window of consecutive integers."""

    window: ZInterval
    values: np.ndarray
    alpha: float

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.float64)
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)


class MaximalEvaluator:
    """Shared state for repeated M_alpha evaluations of one sequence.

    Holds the support hull, its prefix sums, and (lazily) the hull profile;
    point values, window profiles, and superlevel runs all reuse them, so the
    same float formula backs every access path.
    """

    def __init__(self, a: Sequence, alpha: float):
        self.alpha = _validate_alpha(alpha)
        self.a = a
        hull = a.support_hull()
        self.hull = hull
        if hull is None:
            self._vals = np.zeros(0)
            self._P = np.zeros(1)
        else:
            self._vals = a.values[hull.lo - a.offset : hull.hi - a.offset + 1]
            self._P = np.concatenate([[0.0], np.cumsum(self._vals)])
        self._hull_profile: np.ndarray | None = None

    @property
    def total(self) -> float:
        return float(self._P[-1])

    def _profile_on_hull(self) -> np.ndarray:
        if self._hull_profile is None:
            W = self._vals.size
            w_all = alpha_weights(W, self.alpha)
            out = np.full(W, -np.inf)
            P = self._P
            for lo in range(W):
                row = w_all[: W - lo] * (P[lo + 1 :] - P[lo])
                # suffix max over hi >= n for this lo
                suff = np.maximum.accumulate(row[::-1])[::-1]
                np.maximum(out[lo:], suff, out=out[lo:])
            self._hull_profile = out
        return self._hull_profile

    def max_value(self) -> float:
        if self.hull is None:
            return 0.0
        return float(self._profile_on_hull().max())

    def _eval_side(self, ns: np.ndarray) -> np.ndarray:
        """M_alpha at points strictly outside the hull (either side)."""
        hull = self.hull
        W = self._vals.size
        out = np.empty(ns.size)
        if ns.size == 0:
            return out
        x = np.arange(W) + hull.lo
        left = ns < hull.lo
        for mask, sums in (
            (left, self._P[1:]),
            (~left, self._P[-1] - self._P[:W]),
        ):
            pts = ns[mask]
            if pts.size == 0:
                continue
            chunk = max(1, 4_000_000 // W)
            res = np.empty(pts.size)
            for i in range(0, pts.size, chunk):
                sub = pts[i : i + chunk]
                lengths = (
                    x[None, :] - sub[:, None] + 1
                    if sub[0] < hull.lo
                    else sub[:, None] - x[None, :] + 1
                )
                max_len = int(lengths.max())
                if max_len <= _WEIGHT_TABLE_LIMIT:
                    w = alpha_weights(max_len, self.alpha)[lengths - 1]
                else:
                    w = np.power(lengths.astype(np.float64), self.alpha - 1.0)
                res[i : i + chunk] = (w * sums[None, :]).max(axis=1)
            out[mask] = res
        return out

    def point(self, n: int) -> float:
        if self.hull is None:
            return 0.0
        if self.hull.contains(n):
            return float(self._profile_on_hull()[n - self.hull.lo])
        return float(self._eval_side(np.array([n]))[0])

    def profile(self, window: ZInterval) -> np.ndarray:
        out = np.zeros(window.hi - window.lo + 1)
        hull = self.hull
        if hull is None:
            return out
        ns = np.arange(window.lo, window.hi + 1)
        inside = (ns >= hull.lo) & (ns <= hull.hi)
        if inside.any():
            hp = self._profile_on_hull()
            out[inside] = hp[ns[inside] - hull.lo]
        if (~inside).any():
            out[~inside] = self._eval_side(ns[~inside])
        return out

    def _boundary(self, s: float, right: bool) -> int:
        """Last point on the given side with M_alpha > s, by closed form.

        Valid only when the side's first outside point already exceeds s;
        float rounding is repaired by local probes of point().
        """
        hull = self.hull
        W = self._vals.size
        x = np.arange(W) + hull.lo
        sums = (self._P[-1] - self._P[:W]) if right else self._P[1:]
        expo = 1.0 / (1.0 - self.alpha)
        with np.errstate(divide="ignore"):
            reach = np.power(sums / s, expo)
        if float(np.nanmax(reach)) > RADIUS_LIMIT:
            raise ValueError("superlevel radius exceeds 2**52")
        # largest L with L^(alpha-1) * sum > s is ceil(reach) - 1
        lengths = np.ceil(reach).astype(np.int64) - 1
        ok = (sums > 0) & (lengths >= 1)
        if right:
            b = int((x + lengths - 1)[ok].max()) if ok.any() else hull.hi
            b = max(b, hull.hi + 1)
            guard = 0
            while self.point(b + 1) > s:
                b += 1
                guard += 1
                if guard > 1024:
                    raise RuntimeError("superlevel boundary fixup diverged")
            while b > hull.hi + 1 and not self.point(b) > s:
                b -= 1
            return b
        b = int((x - lengths + 1)[ok].min()) if ok.any() else hull.lo
        b = min(b, hull.lo - 1)
        guard = 0
        while self.point(b - 1) > s:
            b -= 1
            guard += 1
            if guard > 1024:
                raise RuntimeError("superlevel boundary fixup diverged")
        while b < hull.lo - 1 and not self.point(b) > s:
            b += 1
        return b

    def superlevel(self, s: float, within: ZInterval | None = None) -> list[ZInterval]:
        """Runs of {n : M_alpha a(n) > s} for s > 0.

        With `within`, the result is clipped to that window; when the set
        reaches a window edge the edge is used directly (values decay
        monotonically away from the hull), skipping the boundary search.
        """
        if not (s > 0.0):
            raise ValueError("threshold must be positive")
        hull = self.hull
        if hull is None:
            return []
        hp = self._profile_on_hull()
        mask = hp > s
        runs: list[ZInterval] = []
        idx = np.flatnonzero(mask)
        if idx.size:
            breaks = np.flatnonzero(np.diff(idx) > 1)
            starts = np.concatenate([[0], breaks + 1])
            ends = np.concatenate([breaks, [idx.size - 1]])
            runs = [
                ZInterval(int(idx[s0]) + hull.lo, int(idx[e0]) + hull.lo)
                for s0, e0 in zip(starts, ends)
            ]
        left_probe = hull.lo - 1 if within is None else max(within.lo, hull.lo - 1)
        right_probe = hull.hi + 1 if within is None else min(within.hi, hull.hi + 1)
        if left_probe < hull.lo and self.point(left_probe) > s:
            if within is not None and self.point(within.lo) > s:
                lo = within.lo
            else:
                lo = self._boundary(s, right=False)
            runs.append(ZInterval(lo, hull.lo - 1))
        if right_probe > hull.hi and self.point(right_probe) > s:
            if within is not None and self.point(within.hi) > s:
                hi = within.hi
            else:
                hi = self._boundary(s, right=True)
            runs.append(ZInterval(hull.hi + 1, hi))
        runs = runs_normalize(runs)
        if within is not None:
            runs = [
                ZInterval(max(r.lo, within.lo), min(r.hi, within.hi))
                for r in runs
                if r.hi >= within.lo and r.lo <= within.hi
            ]
        return runs


def m_alpha_point(a: Sequence, alpha: float, n: int) -> float:
    """M_alpha a(n) at a single point."""
    return MaximalEvaluator(a, alpha).point(n)


def m_alpha_profile(a: Sequence, alpha: float, window: ZInterval) -> MaximalProfile:
    """M_alpha a on every point of the window."""
    ev = MaximalEvaluator(a, alpha)
    return MaximalProfile(window, ev.profile(window), ev.alpha)


def superlevel_set(a: Sequence, alpha: float, s: float) -> list[ZInterval]:
    """{M_alpha a > s} as sorted disjoint interval runs."""
    return MaximalEvaluator(a, alpha).superlevel(s)

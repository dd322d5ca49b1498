"""Scoring kernels for the brute-force oracle.

Each kernel scores every candidate length vector (rows of an m x n int64
matrix) against one distribution. These loops dominate the runtime of the
verification suite, so they are compiled with numba unless the environment
variable MINIMAXCODE_NO_NUMBA is set (or numba is unavailable), in which
case vectorized numpy fallbacks are used. Both implementations are always
importable (``*_numpy`` / ``*_numba``) so they can be benchmarked against
each other.
"""

from __future__ import annotations

import os

import numpy as np


def avg_scores_numpy(L: np.ndarray, p: np.ndarray, lgp: np.ndarray) -> np.ndarray:
    return (L + lgp) @ p


def minimax_scores_numpy(L: np.ndarray, p: np.ndarray, lgp: np.ndarray) -> np.ndarray:
    return np.max(L + lgp, axis=1)


def exp_scores_numpy(
    L: np.ndarray, p: np.ndarray, lgp: np.ndarray, lga: float
) -> np.ndarray:
    t = lgp + L * lga
    m = np.max(t, axis=1, keepdims=True)
    return (m[:, 0] + np.log2(np.sum(np.exp2(t - m), axis=1))) / lga


def dexp_scores_numpy(
    L: np.ndarray, p: np.ndarray, lgp: np.ndarray, d: float
) -> np.ndarray:
    t = lgp + d * (L + lgp)
    m = np.max(t, axis=1, keepdims=True)
    return (m[:, 0] + np.log2(np.sum(np.exp2(t - m), axis=1))) / d


def _build_numba():
    from numba import njit

    @njit(cache=True)
    def avg_scores(L, p, lgp):
        m, n = L.shape
        out = np.empty(m)
        for j in range(m):
            s = 0.0
            for i in range(n):
                s += p[i] * (L[j, i] + lgp[i])
            out[j] = s
        return out

    @njit(cache=True)
    def minimax_scores(L, p, lgp):
        m, n = L.shape
        out = np.empty(m)
        for j in range(m):
            best = L[j, 0] + lgp[0]
            for i in range(1, n):
                v = L[j, i] + lgp[i]
                if v > best:
                    best = v
            out[j] = best
        return out

    @njit(cache=True)
    def exp_scores(L, p, lgp, lga):
        m, n = L.shape
        out = np.empty(m)
        for j in range(m):
            top = lgp[0] + L[j, 0] * lga
            for i in range(1, n):
                t = lgp[i] + L[j, i] * lga
                if t > top:
                    top = t
            s = 0.0
            for i in range(n):
                s += 2.0 ** (lgp[i] + L[j, i] * lga - top)
            out[j] = (top + np.log2(s)) / lga
        return out

    @njit(cache=True)
    def dexp_scores(L, p, lgp, d):
        m, n = L.shape
        out = np.empty(m)
        for j in range(m):
            top = lgp[0] + d * (L[j, 0] + lgp[0])
            for i in range(1, n):
                t = lgp[i] + d * (L[j, i] + lgp[i])
                if t > top:
                    top = t
            s = 0.0
            for i in range(n):
                s += 2.0 ** (lgp[i] + d * (L[j, i] + lgp[i]) - top)
            out[j] = (top + np.log2(s)) / d
        return out

    return avg_scores, minimax_scores, exp_scores, dexp_scores


USING_NUMBA = False
avg_scores = avg_scores_numpy
minimax_scores = minimax_scores_numpy
exp_scores = exp_scores_numpy
dexp_scores = dexp_scores_numpy

if not os.environ.get("MINIMAXCODE_NO_NUMBA"):
    try:
        (
            avg_scores_numba,
            minimax_scores_numba,
            exp_scores_numba,
            dexp_scores_numba,
        ) = _build_numba()
    except ImportError:  # pragma: no cover - numba always present in CI
        pass
    else:
        USING_NUMBA = True
        avg_scores = avg_scores_numba
        minimax_scores = minimax_scores_numba
        exp_scores = exp_scores_numba
        dexp_scores = dexp_scores_numba

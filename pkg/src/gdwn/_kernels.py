"""Compiled inner loop for the optimized sieve engine.

The kernel stamps, for each column n, every value forbidden by a
diagonal line through an earlier (j, pi[j]) whose offset n - j is an
exact positive multiple of the pair component, then scans upward for
the least value that is neither stamped nor (when (0, 1) is a move)
already used.  Stamps carry the column index, so the scratch array
never needs clearing.  Falls back to an identical pure-Python loop when
numba is unavailable.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


@njit(cache=True, nogil=True)
def sieve_kernel(n_max, ps, qs, has_nim, cap):
    """Compute pi[0..n_max]; returns (pi, failed_column) with -1 on success."""
    pi = np.zeros(n_max + 1, np.int64)
    used = np.zeros(cap + 2, np.uint8)
    stamp = np.full(cap + 2, np.int64(-1), np.int64)
    mex0 = 0
    npairs = len(ps)
    for n in range(n_max + 1):
        for k in range(npairs):
            p = ps[k]
            q = qs[k]
            if p == 0 and q == 1:
                continue  # handled by the used bitmap
            j = n - q
            t = 1
            while j >= 0:
                v = pi[j] + t * p
                if v <= cap:
                    stamp[v] = n
                j -= q
                t += 1
            if 0 < p and p != q:
                j = n - p
                t = 1
                while j >= 0:
                    v = pi[j] + t * q
                    if v <= cap:
                        stamp[v] = n
                    j -= p
                    t += 1
        v = mex0 if has_nim else 0
        while True:
            if v > cap:
                return pi, n
            if stamp[v] != n and not (has_nim and used[v] == 1):
                break
            v += 1
        pi[n] = v
        used[v] = 1
        if has_nim:
            while used[mex0] == 1:
                mex0 += 1
    return pi, -1


def sieve_stamped_python(n_max, ps, qs, has_nim, cap):
    """Pure-Python mirror of sieve_kernel (same outputs, much slower)."""
    pi = [0] * (n_max + 1)
    used = bytearray(cap + 2)
    stamp = [-1] * (cap + 2)
    mex0 = 0
    pairs = list(zip(ps, qs))
    for n in range(n_max + 1):
        for p, q in pairs:
            if p == 0 and q == 1:
                continue
            j = n - q
            t = 1
            while j >= 0:
                v = pi[j] + t * p
                if v <= cap:
                    stamp[v] = n
                j -= q
                t += 1
            if 0 < p and p != q:
                j = n - p
                t = 1
                while j >= 0:
                    v = pi[j] + t * q
                    if v <= cap:
                        stamp[v] = n
                    j -= p
                    t += 1
        v = mex0 if has_nim else 0
        while True:
            if v > cap:
                return pi, n
            if stamp[v] != n and not (has_nim and used[v]):
                break
            v += 1
        pi[n] = v
        used[v] = 1
        if has_nim:
            while used[mex0]:
                mex0 += 1
    return pi, -1

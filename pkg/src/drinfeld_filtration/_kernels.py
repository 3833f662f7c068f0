"""Hot loops: modular Gaussian elimination.

The numba versions are used when numba imports and the environment variable
``DRINFELD_FILTRATION_NO_NUMBA`` is unset or "0"; otherwise a vectorized
numpy elimination runs.  Both return identical results.
"""
from __future__ import annotations

import os

import numpy as np

DEFAULT_PRIME = 2_147_483_629  # largest prime below 2^31; products fit in int64

_DISABLED = os.environ.get("DRINFELD_FILTRATION_NO_NUMBA", "0") not in ("", "0")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on the environment
    HAVE_NUMBA = False


def _inv_mod(a: int, p: int) -> int:
    return pow(int(a), -1, p)


def rank_mod_p_numpy(a: np.ndarray, p: int) -> int:
    """Rank over F_p of an int64 matrix with entries in [0, p)."""
    a = np.array(a, dtype=np.int64, copy=True) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * _inv_mod(a[r, c], p)) % p
        below = np.nonzero(a[r + 1:, c])[0] + r + 1
        if below.size:
            f = a[below, c][:, None]
            a[below] = (a[below] - f * a[r][None, :]) % p
        r += 1
    return r


if HAVE_NUMBA:
    @njit(cache=True)
    def _powmod(b, e, p):
        result = 1
        b %= p
        while e > 0:
            if e & 1:
                result = (result * b) % p
            b = (b * b) % p
            e >>= 1
        return result

    @njit(cache=True)
    def _rank_mod_p_nb(a, p):
        rows, cols = a.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for k in range(cols):
                    t = a[r, k]
                    a[r, k] = a[piv, k]
                    a[piv, k] = t
            inv = _powmod(a[r, c], p - 2, p)
            for k in range(c, cols):
                a[r, k] = (a[r, k] * inv) % p
            for i in range(r + 1, rows):
                f = a[i, c]
                if f != 0:
                    for k in range(c, cols):
                        a[i, k] = (a[i, k] - f * a[r, k]) % p
            r += 1
        return r


def rank_mod_p(a: np.ndarray, p: int = DEFAULT_PRIME, use_numba: bool | None = None) -> int:
    """Rank over F_p; p must be prime and below 2^31."""
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2 or 0 in a.shape:
        return 0
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba and HAVE_NUMBA:
        return int(_rank_mod_p_nb(np.ascontiguousarray(a % p), np.int64(p)))
    return rank_mod_p_numpy(a, p)


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"

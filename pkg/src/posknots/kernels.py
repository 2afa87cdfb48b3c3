"""Hot kernels: reduced Burau matrix of a positive braid and det(I - rho(b)).

Polynomial matrices are int arrays of shape ``(m, m, D)`` holding ascending
coefficients in ``t``.  For a positive word with ``c`` letters every minor of
``I - rho(b)`` has degree at most ``c``, so ``D = c + 1`` is enough for the
whole fraction-free (Bareiss) elimination.

Two interchangeable backends compute the same exact result:

* ``numba``: scalar loops compiled with ``numba.njit`` in int64, returning an
  overflow status instead of wrapping;
* ``numpy``: vectorised over matrix entries, run in int64 first and rerun with
  Python-int object arrays if a magnitude guard trips.

Any int64 overflow therefore ends in the exact object-array path.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ._accel import HAVE_NUMBA, njit
from .errors import InexactDivisionError

__all__ = ["closure_determinant", "default_backend", "BACKENDS"]

# every int64 value is kept strictly below this, so one add/sub cannot wrap
LIMIT = 1 << 61

_OK, _OVERFLOW, _INEXACT = 0, 1, 2

BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


# --------------------------------------------------------------------------
# numba backend


@njit
def _burau_nb(letters, m, D):
    M = np.zeros((m, m, D), dtype=np.int64)
    for i in range(m):
        M[i, i, 0] = 1
    col = np.zeros(D, dtype=np.int64)
    for x in letters:
        r = x - 1
        for a in range(m):
            for d in range(D):
                col[d] = M[a, r, d]
            M[a, r, 0] = 0
            for d in range(1, D):
                M[a, r, d] = -col[d - 1]
            if r > 0:
                for d in range(1, D):
                    v = M[a, r - 1, d] + col[d - 1]
                    if v >= LIMIT or v <= -LIMIT:
                        return M, _OVERFLOW
                    M[a, r - 1, d] = v
            if r < m - 1:
                for d in range(D):
                    v = M[a, r + 1, d] + col[d]
                    if v >= LIMIT or v <= -LIMIT:
                        return M, _OVERFLOW
                    M[a, r + 1, d] = v
    return M, _OK


@njit
def _bareiss_nb(A):
    m = A.shape[0]
    D = A.shape[2]
    det = np.zeros(D, dtype=np.int64)
    prev = np.zeros(D, dtype=np.int64)
    prev[0] = 1
    num = np.zeros(2 * D - 1, dtype=np.int64)
    sign = 1
    for k in range(m - 1):
        piv = -1
        for i in range(k, m):
            for d in range(D):
                if A[i, k, d] != 0:
                    piv = i
                    break
            if piv >= 0:
                break
        if piv < 0:
            return det, _OK
        if piv != k:
            for j in range(m):
                for d in range(D):
                    tmp = A[k, j, d]
                    A[k, j, d] = A[piv, j, d]
                    A[piv, j, d] = tmp
            sign = -sign
        mx = 0
        for i in range(k, m):
            for j in range(k, m):
                for d in range(D):
                    v = abs(A[i, j, d])
                    if v > mx:
                        mx = v
        # products below are summed 2D at a time
        if mx >= np.int64(np.sqrt(LIMIT / (2.0 * D))) - 1:
            return det, _OVERFLOW
        dp = 0
        for d in range(D):
            if prev[d] != 0:
                dp = d
        lead = prev[dp]
        mprev = 0
        for d in range(dp + 1):
            if abs(prev[d]) > mprev:
                mprev = abs(prev[d])
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                for d in range(2 * D - 1):
                    num[d] = 0
                for s in range(D):
                    a = A[k, k, s]
                    if a != 0:
                        for d in range(D):
                            num[s + d] += a * A[i, j, d]
                    b = A[i, k, s]
                    if b != 0:
                        for d in range(D):
                            num[s + d] -= b * A[k, j, d]
                for d in range(D):
                    A[i, j, d] = 0
                for d in range(2 * D - 2, dp - 1, -1):
                    c = num[d]
                    if c == 0:
                        continue
                    qc = c // lead
                    if qc * lead != c or d - dp >= D:
                        return det, _INEXACT
                    if abs(qc) >= LIMIT // mprev:
                        return det, _OVERFLOW
                    for e in range(dp + 1):
                        v = num[d - dp + e] - qc * prev[e]
                        if v >= LIMIT or v <= -LIMIT:
                            return det, _OVERFLOW
                        num[d - dp + e] = v
                    A[i, j, d - dp] = qc
                for d in range(dp):
                    if num[d] != 0:
                        return det, _INEXACT
        for d in range(D):
            prev[d] = A[k, k, d]
    for d in range(D):
        det[d] = sign * A[m - 1, m - 1, d]
    return det, _OK


@njit
def _closure_det_nb(letters, m, D):
    M, status = _burau_nb(letters, m, D)
    if status != _OK:
        return np.zeros(D, dtype=np.int64), status
    for i in range(m):
        for j in range(m):
            for d in range(D):
                M[i, j, d] = -M[i, j, d]
        M[i, i, 0] += 1
    return _bareiss_nb(M)


# --------------------------------------------------------------------------
# numpy backend


class _Overflow(Exception):
    pass


def _guard(arr: np.ndarray) -> None:
    if arr.dtype != object and arr.size and int(np.abs(arr).max()) >= LIMIT:
        raise _Overflow


def _burau_np(letters: np.ndarray, m: int, D: int, dtype) -> np.ndarray:
    M = np.zeros((m, m, D), dtype=dtype)
    for i in range(m):
        M[i, i, 0] = 1
    for x in letters:
        r = int(x) - 1
        col = M[:, r, :].copy()
        M[:, r, :] = 0
        M[:, r, 1:] = -col[:, :-1]
        if r > 0:
            M[:, r - 1, 1:] += col[:, :-1]
            _guard(M[:, r - 1])
        if r < m - 1:
            M[:, r + 1, :] += col
            _guard(M[:, r + 1])
    return M


def _exact_div_np(num: np.ndarray, prev: np.ndarray, D: int) -> np.ndarray:
    nz = np.flatnonzero(prev)
    dp = int(nz[-1])
    lead = prev[dp]
    pv = prev[: dp + 1]
    mprev = int(np.abs(pv).max())
    L = num.shape[-1]
    q = np.zeros(num.shape[:-1] + (L - dp,), dtype=num.dtype)
    for d in range(L - 1, dp - 1, -1):
        c = num[..., d]
        if not c.any():
            continue
        qc = c // lead
        if (qc * lead != c).any():
            raise InexactDivisionError("Bareiss step left a remainder")
        if num.dtype != object and int(np.abs(qc).max()) >= LIMIT // mprev:
            raise _Overflow
        num[..., d - dp : d + 1] -= qc[..., None] * pv
        _guard(num[..., d - dp : d + 1])
        q[..., d - dp] = qc
    if num[..., :dp].any() or q[..., D:].any():
        raise InexactDivisionError("Bareiss quotient is not a polynomial of bounded degree")
    return q[..., :D]


def _bareiss_np(A: np.ndarray) -> np.ndarray:
    m, _, D = A.shape
    dtype = A.dtype
    prev = np.zeros(D, dtype=dtype)
    prev[0] = 1
    sign = 1
    for k in range(m - 1):
        nz = np.flatnonzero((A[k:, k, :] != 0).any(axis=1))
        if nz.size == 0:
            return np.zeros(D, dtype=dtype)
        piv = k + int(nz[0])
        if piv != k:
            A[[k, piv]] = A[[piv, k]]
            sign = -sign
        if dtype != object:
            mx = int(np.abs(A[k:, k:]).max())
            if mx * mx * 2 * D >= LIMIT:
                raise _Overflow
        akk = A[k, k].copy()
        aik = A[k + 1 :, k].copy()
        akj = A[k, k + 1 :].copy()
        sub = A[k + 1 :, k + 1 :]
        r = m - k - 1
        num = np.zeros((r, r, 2 * D - 1), dtype=dtype)
        for s in np.flatnonzero(akk):
            num[:, :, s : s + D] += akk[s] * sub
        for s in np.flatnonzero((aik != 0).any(axis=0)):
            num[:, :, s : s + D] -= aik[:, s][:, None, None] * akj[None, :, :]
        A[k + 1 :, k + 1 :] = _exact_div_np(num, prev, D)
        prev = akk
    return sign * A[m - 1, m - 1]


def _closure_det_np(letters: np.ndarray, m: int, D: int, dtype) -> np.ndarray:
    M = _burau_np(letters, m, D, dtype)
    A = -M
    for i in range(m):
        A[i, i, 0] += 1
    return _bareiss_np(A)


# --------------------------------------------------------------------------


def closure_determinant(letters: Sequence[int], strands: int, backend: str | None = None) -> list[int]:
    """Ascending integer coefficients of ``det(I - rho(b))`` for the reduced Burau ``rho``."""
    m = strands - 1
    if m <= 0:
        return [1]
    D = len(letters) + 1
    arr = np.asarray(letters, dtype=np.int64)
    backend = backend or default_backend()
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba":
        coeffs, status = _closure_det_nb(arr, m, D)
        if status == _OK:
            return _trim([int(x) for x in coeffs])
        if status == _INEXACT:
            raise InexactDivisionError("Bareiss step left a remainder")
    else:
        try:
            return _trim([int(x) for x in _closure_det_np(arr, m, D, np.int64)])
        except _Overflow:
            pass
    return _trim([int(x) for x in _closure_det_np(arr, m, D, object)])


def _trim(coeffs: list[int]) -> list[int]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs

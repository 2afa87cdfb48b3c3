import random

import numpy as np
import pytest

from posknots import kernels
from posknots._accel import HAVE_NUMBA
from posknots.braid import BraidWord
from posknots.kernels import closure_determinant

needs_numba = pytest.mark.skipif(not HAVE_NUMBA, reason="numba unavailable or disabled")


def random_words(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 8)
        yield n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 30)))


def test_trefoil():
    assert closure_determinant((1, 1, 1), 2, backend="numpy") == [1, 0, 0, 1]


def test_one_strand():
    assert closure_determinant((), 1) == [1]


def test_unknown_backend():
    with pytest.raises(ValueError):
        closure_determinant((1,), 2, backend="fortran")


@needs_numba
def test_backends_agree():
    for n, w in random_words(300, seed=2):
        assert closure_determinant(w, n, "numba") == closure_determinant(w, n, "numpy")


def test_object_path_matches_int64():
    for n, w in random_words(100, seed=4):
        arr = np.asarray(w, dtype=np.int64)
        D = len(w) + 1
        fast = kernels._closure_det_np(arr, n - 1, D, np.int64)
        exact = kernels._closure_det_np(arr, n - 1, D, object)
        assert [int(x) for x in fast] == [int(x) for x in exact]


def test_forced_overflow_falls_back(monkeypatch):
    w = (1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3)
    expected = closure_determinant(w, 4, backend="numpy")
    monkeypatch.setattr(kernels, "LIMIT", 4)
    with pytest.raises(kernels._Overflow):
        kernels._closure_det_np(np.asarray(w, dtype=np.int64), 3, len(w) + 1, np.int64)
    assert closure_determinant(w, 4, backend="numpy") == expected


@pytest.mark.parametrize("backend", ["numba", "numpy"])
def test_large_torus_knot_exact(backend):
    if backend == "numba" and not HAVE_NUMBA:
        pytest.skip("numba unavailable or disabled")
    # T(7, 50): the Bareiss intermediates are large, the answer has +-1 coefficients
    w = tuple(range(1, 7)) * 50
    det = closure_determinant(w, 7, backend)
    assert max(abs(c) for c in det) <= 7
    assert sum(det) == 7  # n * Delta(1) for a knot closure
    assert det[0] == 1


@needs_numba
def test_numba_disabled_flag(monkeypatch):
    import importlib

    from posknots import _accel

    monkeypatch.setenv("POSKNOTS_DISABLE_NUMBA", "1")
    try:
        mod = importlib.reload(_accel)
        assert mod.DISABLED and not mod.HAVE_NUMBA
    finally:
        monkeypatch.delenv("POSKNOTS_DISABLE_NUMBA")
        importlib.reload(_accel)


def test_determinant_at_one():
    # at t = 1 the value is n * Delta(1) = +-n for knot closures
    from posknots.braid import closure_info

    for n, w in random_words(300, seed=6):
        if closure_info(BraidWord(n, w)).is_knot:
            assert abs(sum(closure_determinant(w, n))) == n

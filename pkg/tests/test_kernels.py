import os
import subprocess
import sys
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from drinfeld_filtration import _kernels
from drinfeld_filtration._kernels import DEFAULT_PRIME, rank_mod_p, rank_mod_p_numpy


def span_rank(a, p):
    """log_p of the number of vectors in the row space."""
    rows = [tuple(int(x) % p for x in r) for r in a]
    span = {tuple([0] * a.shape[1])}
    for r in rows:
        span = {tuple((s + c * x) % p for s, x in zip(v, r)) for v in span for c in range(p)}
    k = 0
    size = len(span)
    while size > 1:
        size //= p
        k += 1
    return k


small = st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(
    lambda s: arrays(np.int64, s, elements=st.integers(0, 6)))


@settings(max_examples=150, deadline=None)
@given(small, st.sampled_from([2, 3, 5, 7]))
def test_rank_against_row_space(a, p):
    want = span_rank(a, p)
    assert rank_mod_p_numpy(a % p, p) == want
    assert rank_mod_p(a % p, p, use_numba=True) == want


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.integers(1, 30), st.integers(1, 30)).flatmap(
    lambda s: arrays(np.int64, s, elements=st.integers(-5, 5))))
def test_backends_agree_at_default_prime(a):
    assert rank_mod_p(a, DEFAULT_PRIME, use_numba=True) == rank_mod_p(a, DEFAULT_PRIME, use_numba=False)


def test_large_entries_do_not_overflow():
    rng = np.random.default_rng(5)
    a = rng.integers(0, DEFAULT_PRIME, size=(40, 40), dtype=np.int64)
    a[-1] = (a[0] + a[1]) % DEFAULT_PRIME
    assert rank_mod_p(a, use_numba=True) == rank_mod_p(a, use_numba=False) == 39


def test_degenerate_shapes():
    assert rank_mod_p(np.zeros((0, 3), dtype=np.int64)) == 0
    assert rank_mod_p(np.zeros((3, 3), dtype=np.int64)) == 0


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")
def test_environment_flag_selects_numpy():
    env = dict(os.environ, DRINFELD_FILTRATION_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "from drinfeld_filtration._kernels import backend; print(backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
    assert _kernels.backend() == "numba"


def test_benchmark_script_runs():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    out = subprocess.run([sys.executable, os.path.join(root, "benchmarks", "bench_rank.py"),
                          "--repeat", "1", "--sizes", "20,40"], capture_output=True, text=True, check=True)
    assert "random 40x60" in out.stdout and "T(2,2,3) boundary 2" in out.stdout

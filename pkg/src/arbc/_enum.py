"""Gray-code codeword enumeration kernels.

Message index ``i`` maps to the reflected Gray code ``i ^ (i >> 1)``;
consecutive indices differ in bit ``ctz(i)``, so each step XORs exactly
one generator row into the running codeword.  The message space can be
split into disjoint index ranges and the per-range weight histograms
summed, which gives the same result as a single sequential pass.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)


@njit(cache=True, nogil=True)
def _popcount(x):
    x = x - ((x >> _S1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    return (x * _H01) >> _S56


@njit(cache=True, nogil=True)
def _spectrum_range(rows, n, start, stop):
    k, nw = rows.shape
    counts = np.zeros(n + 1, dtype=np.int64)
    cur = np.zeros(nw, dtype=np.uint64)
    g = start ^ (start >> 1)
    for i in range(k):
        if (g >> i) & 1:
            for w in range(nw):
                cur[w] ^= rows[i, w]
    wt = 0
    for w in range(nw):
        wt += _popcount(cur[w])
    counts[wt] += 1
    for idx in range(start + 1, stop):
        bit = 0
        while not (idx >> bit) & 1:
            bit += 1
        wt = 0
        for w in range(nw):
            cur[w] ^= rows[bit, w]
            wt += _popcount(cur[w])
        counts[wt] += 1
    return counts


def thread_count():
    """Worker cap from ``ARBC_THREADS`` (defaults to the CPU count)."""
    env = os.environ.get("ARBC_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def gray_spectrum(words, n, threads=None):
    """Exact weight histogram of the span of the packed generator rows."""
    words = np.ascontiguousarray(words, dtype=np.uint64)
    k = words.shape[0]
    total = 1 << k
    threads = thread_count() if threads is None else threads
    # fixed chunking keeps work units identical for every thread count
    chunks = 1 if k < 16 else 16
    step = total // chunks
    bounds = [(c * step, (c + 1) * step) for c in range(chunks)]
    if threads <= 1 or chunks == 1:
        parts = [_spectrum_range(words, n, a, b) for a, b in bounds]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda ab: _spectrum_range(words, n, *ab), bounds))
    return np.sum(parts, axis=0)

"""Binary linear block codes.

Covers generic (n, k) codes given by a generator matrix, narrow-sense
binary BCH codes built from GF(2^m) arithmetic, exhaustive and sampled
weight spectra, and the Gilbert-Varshamov distance benchmark.

Binary polynomials are Python ints: bit ``i`` is the coefficient of x^i.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from . import gf2
from ._enum import gray_spectrum
from .errors import DimensionMismatch, DimensionTooLarge, RankDeficient
from .gf2 import BitMatrix

EXHAUSTIVE_MAX_K = 26

# x^m + ... ; one fixed primitive polynomial per degree
PRIMITIVE_POLYS = {
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
}


# --- generic linear codes --------------------------------------------------

@dataclass(frozen=True, eq=False)
class LinearCode:
    """An (n, k) binary code with a fixed information set.

    ``info_set`` holds k column positions where ``G`` is invertible and
    ``G_J_inv`` is the inverse of those columns, so the message of a
    codeword ``c`` is ``c[info_set] @ G_J_inv``.
    """

    G: BitMatrix
    H: BitMatrix
    info_set: tuple
    G_J_inv: BitMatrix
    name: str = field(default="", compare=False)

    @property
    def n(self):
        return self.G.cols

    @property
    def k(self):
        return self.G.rows

    @functools.cached_property
    def Ht(self):
        return self.H.T

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"LinearCode({self.n},{self.k}){label}"


def code_from_generator(G, info_set=None, name=""):
    """Build a :class:`LinearCode` from a full-rank generator matrix.

    Without an explicit ``info_set`` the first k linearly independent
    columns are used.
    """
    _, pivots = gf2.row_reduce(G)
    if len(pivots) < G.rows:
        raise RankDeficient(f"generator has rank {len(pivots)} < {G.rows}")
    j = tuple(int(x) for x in (pivots if info_set is None else info_set))
    if len(j) != G.rows or len(set(j)) != len(j):
        raise DimensionMismatch(f"information set must hold {G.rows} distinct positions")
    G_J_inv = gf2.inverse(gf2.select_columns(G, j))
    H = gf2.right_kernel(G)
    return LinearCode(G=G, H=H, info_set=j, G_J_inv=G_J_inv, name=name)


def code_from_parity_check(H, name=""):
    """Code whose parity-check rows are ``H``; dependent or zero rows are allowed."""
    G = gf2.right_kernel(H)
    if G.rows == 0:
        raise RankDeficient("parity-check matrix leaves only the zero code")
    return code_from_generator(G, name=name)


def encode(code, u):
    return gf2.as_bits(u, code.k) @ code.G


def message_from_codeword(code, c):
    """Read the message back off the information set of a codeword."""
    c = gf2.as_bits(c, code.n)
    return c[list(code.info_set)] @ code.G_J_inv


def syndrome(code, v):
    return np.asarray(v, dtype=np.uint8) @ code.Ht


def is_codeword(code, v):
    return not syndrome(code, v).any()


def hamming74():
    A = [[1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]]
    G = np.hstack([np.eye(4, dtype=np.uint8), np.array(A, dtype=np.uint8)])
    return code_from_generator(BitMatrix(G), name="hamming(7,4)")


def repetition_code(n):
    return code_from_generator(BitMatrix(np.ones((1, n), dtype=np.uint8)), name=f"rep({n})")


# --- GF(2^m) and BCH -------------------------------------------------------

class GFExtField:
    """GF(2^m) with log/antilog tables built from a primitive polynomial."""

    def __init__(self, m, primitive_poly=None):
        if m not in PRIMITIVE_POLYS and primitive_poly is None:
            raise ValueError(f"no primitive polynomial tabulated for m={m}")
        self.m = m
        self.primitive_poly = PRIMITIVE_POLYS[m] if primitive_poly is None else primitive_poly
        self.order = (1 << m) - 1
        self.exp = np.zeros(2 * self.order, dtype=np.int64)
        self.log = np.full(1 << m, -1, dtype=np.int64)
        x = 1
        for i in range(self.order):
            self.exp[i] = x
            if self.log[x] != -1:
                raise ValueError(f"polynomial {self.primitive_poly:#b} is not primitive")
            self.log[x] = i
            x <<= 1
            if x >> m:
                x ^= self.primitive_poly
        self.exp[self.order :] = self.exp[: self.order]

    def alpha_pow(self, i):
        return int(self.exp[i % self.order])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])


def poly_mul(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_divmod(a, b):
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    return q, a


def poly_degree(p):
    return p.bit_length() - 1


def cyclotomic_coset(m, s):
    n = (1 << m) - 1
    coset = []
    x = s % n
    while x not in coset:
        coset.append(x)
        x = (2 * x) % n
    return tuple(sorted(coset))


def cyclotomic_cosets(m):
    """2-cyclotomic cosets modulo 2^m - 1 partitioning {1, ..., 2^m - 2}."""
    n = (1 << m) - 1
    seen = set()
    cosets = []
    for s in range(1, n):
        if s not in seen:
            c = cyclotomic_coset(m, s)
            seen.update(c)
            cosets.append(c)
    return cosets


def minimal_polynomial(field, exponent):
    """Minimal polynomial over GF(2) of alpha^exponent."""
    # coefficients in GF(2^m), lowest degree first
    coeffs = [1]
    for j in cyclotomic_coset(field.m, exponent):
        root = field.alpha_pow(j)
        shifted = [0] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] ^= field.mul(c, root)
        coeffs = shifted
    if any(c > 1 for c in coeffs):
        raise ArithmeticError("minimal polynomial has coefficients outside GF(2)")
    return sum(c << i for i, c in enumerate(coeffs))


def bch_generator_poly(m, t_design):
    field_ = GFExtField(m)
    g = 1
    used = set()
    for i in range(1, 2 * t_design + 1):
        coset = cyclotomic_coset(m, i)
        if coset not in used:
            used.add(coset)
            g = poly_mul(g, minimal_polynomial(field_, i))
    return g


def cyclic_generator_matrix(g, n):
    k = n - poly_degree(g)
    coeffs = np.array([(g >> j) & 1 for j in range(poly_degree(g) + 1)], dtype=np.uint8)
    dense = np.zeros((k, n), dtype=np.uint8)
    for i in range(k):
        dense[i, i : i + coeffs.size] = coeffs
    return BitMatrix(dense)


def bch_build(m, t_design):
    """Narrow-sense binary BCH code of length 2^m - 1 and designed distance 2t+1."""
    if not 3 <= m <= 10:
        raise ValueError(f"m must lie in 3..10, got {m}")
    if not 1 <= t_design < (1 << (m - 1)):
        raise ValueError(f"t_design must lie in 1..{(1 << (m - 1)) - 1}, got {t_design}")
    n = (1 << m) - 1
    g = bch_generator_poly(m, t_design)
    if poly_degree(g) >= n:
        raise ValueError(f"BCH(m={m}, t={t_design}) has dimension 0")
    G = cyclic_generator_matrix(g, n)
    return code_from_generator(G, name=f"bch(m={m},t={t_design})")


# --- spectra ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class WeightSpectrum:
    """Codeword counts by Hamming weight.

    Exact spectra hold integer counts summing to 2^k; sampled spectra hold
    counts scaled up by 2^k / sample_size.
    """

    n: int
    counts: np.ndarray
    method: str = "exact"
    sample_size: int | None = None

    @property
    def min_distance(self):
        nz = np.flatnonzero(self.counts[1:])
        return int(nz[0]) + 1 if nz.size else None

    def to_text(self):
        if self.method == "exact":
            return "\n".join(f"{w} {int(c)}" for w, c in enumerate(self.counts))
        return "\n".join(f"{w} {c:.6g}" for w, c in enumerate(self.counts))


def _check_exhaustive(code, limit=EXHAUSTIVE_MAX_K):
    if code.k > limit:
        raise DimensionTooLarge(f"k={code.k} exceeds exhaustive limit {limit}")


def weight_spectrum(code, mode="exact", size=None, rng=None, threads=None,
                    limit=EXHAUSTIVE_MAX_K):
    """Weight distribution of ``code``.

    ``mode="exact"`` walks all 2^k codewords in Gray-code order;
    ``mode="sampled"`` encodes ``size`` uniform random messages drawn from ``rng``.
    """
    if mode == "exact":
        _check_exhaustive(code, limit)
        counts = gray_spectrum(code.G.words, code.n, threads=threads)
        return WeightSpectrum(code.n, counts, "exact")
    if mode == "sampled":
        if size is None or rng is None:
            raise ValueError("sampled mode needs size and rng")
        msgs = rng.integers(0, 2, size=(size, code.k), dtype=np.uint8)
        w = gf2.weight(msgs @ code.G)
        hist = np.bincount(w, minlength=code.n + 1).astype(np.float64)
        return WeightSpectrum(code.n, hist * (2.0**code.k / size), "sampled", size)
    raise ValueError(f"unknown spectrum mode {mode!r}")


def min_distance(code, threads=None):
    """Minimum nonzero codeword weight by exhaustive Gray-code enumeration."""
    _check_exhaustive(code)
    return weight_spectrum(code, threads=threads).min_distance


# --- Gilbert-Varshamov -----------------------------------------------------

def gv_bound(n, k):
    """Largest d with sum_{i<=d-2} C(n-1, i) < 2^(n-k).

    A binary linear [n, k, >= d] code is guaranteed to exist for this d.
    """
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got ({n}, {k})")
    budget = 1 << (n - k)
    total = 0
    d = 1
    while d <= n - 1:
        nxt = total + math.comb(n - 1, d - 1)
        if nxt >= budget:
            break
        total = nxt
        d += 1
    return d


def _binary_entropy(p):
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def gv_bound_asymptotic(n, k):
    """Relative GV distance scaled to length n: n * H2^{-1}(1 - k/n)."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got ({n}, {k})")
    target = 1 - k / n
    p = brentq(lambda x: _binary_entropy(x) - target, 1e-15, 0.5)
    return n * p

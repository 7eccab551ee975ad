"""Original McEliece encryption at desk scale.

The public key is ``S G P`` for a random nonsingular scrambler ``S`` and a
random permutation ``P``.  The private decoder is a complete syndrome
table of minimum-weight coset leaders, which limits the redundancy to
``n - k <= 24``.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import gf2
from .codes import LinearCode, message_from_codeword
from .errors import DecodeFailure, DistanceTooSmall, TableTooLarge, WeightExceedsT
from .gf2 import BitMatrix

MAX_REDUNDANCY = 24


class SyndromeTable:
    """Map every (n-k)-bit syndrome to a minimum-weight coset leader.

    Syndromes are integers with bit ``i`` equal to parity check ``i``.
    Leaders are filled level by level in increasing weight, lexicographic
    within a level, so the table is deterministic.
    """

    def __init__(self, H):
        r, n = H.shape
        if r > MAX_REDUNDANCY:
            raise TableTooLarge(f"n-k={r} exceeds the syndrome-table limit {MAX_REDUNDANCY}")
        self.n = n
        self.redundancy = r
        hd = H.to_array().astype(np.int64)
        self.columns = (hd << np.arange(r, dtype=np.int64)[:, None]).sum(axis=0)
        size = 1 << r
        self.leaders = np.zeros((size, n), dtype=np.uint8)
        self.weights = np.full(size, -1, dtype=np.int64)
        # patterns sharing a syndrome at their own weight; w -> count
        self.collisions = {}
        filled = 0
        for w in range(n + 1):
            if filled == size:
                break
            if w == 0:
                self.weights[0] = 0
                filled = 1
                self.collisions[0] = 0
                continue
            supports = np.array(list(itertools.combinations(range(n), w)), dtype=np.int64)
            synd = np.bitwise_xor.reduce(self.columns[supports], axis=1)
            uniq, first = np.unique(synd, return_index=True)
            self.collisions[w] = len(synd) - len(uniq)
            fresh = self.weights[uniq] < 0
            new_s = uniq[fresh]
            self.leaders[new_s[:, None], supports[first[fresh]]] = 1
            self.weights[new_s] = w
            filled += int(fresh.sum())
        self.max_weight = int(self.weights.max())

    def __len__(self):
        return int((self.weights >= 0).sum())

    def syndrome_index(self, v):
        v = np.asarray(v, dtype=bool)
        return int(np.bitwise_xor.reduce(self.columns[v])) if v.any() else 0

    def leader(self, s):
        return self.leaders[s]

    def corrects(self, t):
        """True when every pattern of weight <= t has its own syndrome."""
        if t > self.max_weight:
            return False
        low = self.weights <= t
        count = sum(math.comb(self.n, w) for w in range(t + 1))
        return int(low.sum()) == count


@dataclass(frozen=True, eq=False)
class ClassicPublicKey:
    G_pub: BitMatrix
    t: int

    @property
    def n(self):
        return self.G_pub.cols

    @property
    def k(self):
        return self.G_pub.rows


@dataclass(frozen=True, eq=False)
class ClassicPrivateKey:
    S: BitMatrix
    code: LinearCode
    P: BitMatrix
    t: int

    @functools.cached_property
    def S_inv(self):
        return gf2.inverse(self.S)

    @functools.cached_property
    def P_inv(self):
        return gf2.inverse(self.P)

    @functools.cached_property
    def table(self):
        return SyndromeTable(self.code.H)

    def public_key(self):
        return ClassicPublicKey(self.S @ self.code.G @ self.P, self.t)


def classic_keygen(code, t, rng):
    """Return ``(public, private)`` for the given code and error bound ``t``."""
    if code.n - code.k > MAX_REDUNDANCY:
        raise TableTooLarge(f"n-k={code.n - code.k} exceeds {MAX_REDUNDANCY}")
    if t < 1:
        raise ValueError("t must be at least 1")
    S = gf2.random_nonsingular(code.k, rng)
    P = gf2.random_permutation_matrix(code.n, rng)
    sk = ClassicPrivateKey(S=S, code=code, P=P, t=t)
    # distinct syndromes for all weight <= t patterns  <=>  d >= 2t + 1
    if not sk.table.corrects(t):
        raise DistanceTooSmall(f"{code!r} cannot correct t={t} errors")
    return sk.public_key(), sk


def random_error(n, t, rng):
    """Uniform error vector of weight exactly ``t``."""
    e = np.zeros(n, dtype=np.uint8)
    e[rng.choice(n, size=t, replace=False)] = 1
    return e


def classic_encrypt(pk, u, e):
    u = gf2.as_bits(u, pk.k)
    e = gf2.as_bits(e, pk.n)
    if gf2.weight(e) > pk.t:
        raise WeightExceedsT(f"error weight {gf2.weight(e)} exceeds t={pk.t}")
    return (u @ pk.G_pub) ^ e


def classic_decrypt(sk, c):
    """Unpermute, correct with the syndrome table, then strip the scrambler."""
    c = gf2.as_bits(c, sk.code.n)
    y = c @ sk.P_inv
    s = sk.table.syndrome_index(y)
    if sk.table.weights[s] > sk.t:
        raise DecodeFailure(f"coset leader weight {sk.table.weights[s]} exceeds t={sk.t}")
    codeword = y ^ sk.table.leader(s)
    uS = message_from_codeword(sk.code, codeword)
    return uS @ sk.S_inv

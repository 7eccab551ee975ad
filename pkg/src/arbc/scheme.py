"""McEliece variant whose error vectors may have any weight.

Public key ``(G1, G2) = (G M, Q (G0 + T) M)`` where ``M`` and ``T`` are
nonsingular, the rows of ``G0`` are codewords, and ``Q T`` vanishes on
the columns of an information set ``J``.  A ciphertext is
``u G1 + e G2``; after removing ``M`` the masked error ``e Q T`` leaves
``J`` untouched, so the codeword part can be read off ``J`` directly.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from . import gf2
from .codes import LinearCode, is_codeword, message_from_codeword
from .errors import MalformedCiphertext, RetriesExceeded
from .gf2 import BitMatrix

MAX_RESAMPLES = 64


@dataclass(frozen=True, eq=False)
class ArbErrPublicKey:
    G1: BitMatrix
    G2: BitMatrix

    @property
    def n(self):
        return self.G1.cols

    @property
    def k(self):
        return self.G1.rows


@dataclass(frozen=True, eq=False)
class ArbErrPrivateKey:
    code: LinearCode
    M: BitMatrix
    T: BitMatrix
    Q: BitMatrix
    G0: BitMatrix

    @property
    def info_set(self):
        return self.code.info_set

    @functools.cached_property
    def M_inv(self):
        return gf2.inverse(self.M)

    @functools.cached_property
    def T_inv(self):
        return gf2.inverse(self.T)

    @functools.cached_property
    def QT(self):
        return self.Q @ self.T

    def public_key(self):
        return ArbErrPublicKey(self.code.G @ self.M, self.Q @ (self.G0 + self.T) @ self.M)


def build_qt(T, j, rng):
    """Return ``Q`` such that ``Q @ T`` is zero on the columns ``j``.

    ``Q = L X`` where the rows of ``X`` span the left kernel of ``T[:, j]``
    and ``L`` is a random n x (n-k) matrix of full column rank.
    """
    n = T.rows
    k = len(j)
    X = gf2.left_kernel(gf2.select_columns(T, j))
    assert X.rows == n - k, "kernel dimension must be n-k for nonsingular T"
    L = gf2.random_full_column_rank(n, n - k, rng)
    return L @ X


def build_g0(code, rng):
    """n x n matrix whose rows are encodings of uniform random messages."""
    msgs = rng.integers(0, 2, size=(code.n, code.k), dtype=np.uint8)
    return BitMatrix(msgs @ code.G)


def arb_keygen(code, rng):
    """Return ``(public, private)``; resample until ``rank(G2) = n - k``."""
    n, k = code.n, code.k
    M = gf2.random_nonsingular(n, rng)
    for attempt in range(MAX_RESAMPLES):
        if attempt == 0 or attempt % 8 == 0:
            T = gf2.random_nonsingular(n, rng)
            Q = build_qt(T, code.info_set, rng)
        G0 = build_g0(code, rng)
        sk = ArbErrPrivateKey(code=code, M=M, T=T, Q=Q, G0=G0)
        pk = sk.public_key()
        if gf2.rank(pk.G2) == n - k:
            return pk, sk
    raise RetriesExceeded(f"rank(G2) stayed below {n - k} after {MAX_RESAMPLES} resamples")


def random_plain(k, rng):
    return rng.integers(0, 2, size=k, dtype=np.uint8)


def uniform_error(n, rng):
    """Error vector drawn uniformly from all 2^n vectors."""
    return rng.integers(0, 2, size=n, dtype=np.uint8)


def arb_encrypt(pk, u, e):
    u = gf2.as_bits(u, pk.k)
    e = gf2.as_bits(e, pk.n)
    return (u @ pk.G1) ^ (e @ pk.G2)


@dataclass(frozen=True)
class DecryptTrace:
    """Intermediate vectors of one decryption."""

    y: np.ndarray
    codeword: np.ndarray
    eQT: np.ndarray
    eQ: np.ndarray
    uG: np.ndarray
    u: np.ndarray


def arb_decrypt_trace(sk, c):
    c = gf2.as_bits(c, sk.code.n)
    code = sk.code
    J = list(code.info_set)
    y = c @ sk.M_inv
    # (e Q T) vanishes on J, so y[J] carries the codeword uG + eQ G0 untouched
    c_hat = (y[J] @ code.G_J_inv) @ code.G
    eQT = y ^ c_hat
    eQ = eQT @ sk.T_inv
    uG = c_hat ^ (eQ @ sk.G0)
    if not is_codeword(code, uG):
        raise MalformedCiphertext("recovered uG is not a codeword")
    u = message_from_codeword(code, uG)
    return DecryptTrace(y=y, codeword=c_hat, eQT=eQT, eQ=eQ, uG=uG, u=u)


def arb_decrypt(sk, c):
    """Recover the plaintext of ``c`` with the private key."""
    return arb_decrypt_trace(sk, c).u


def arb_encrypt_batch(pk, U, E):
    """Encrypt stacked messages ``U`` (N x k) with errors ``E`` (N x n)."""
    return (np.asarray(U, np.uint8) @ pk.G1) ^ (np.asarray(E, np.uint8) @ pk.G2)


def arb_decrypt_batch(sk, C):
    """Vectorised decryption of stacked ciphertexts ``C`` (N x n)."""
    code = sk.code
    J = list(code.info_set)
    Y = np.asarray(C, np.uint8) @ sk.M_inv
    C_hat = (Y[:, J] @ code.G_J_inv) @ code.G
    eQ = (Y ^ C_hat) @ sk.T_inv
    UG = C_hat ^ (eQ @ sk.G0)
    if (UG @ code.Ht).any():
        raise MalformedCiphertext("recovered uG is not a codeword")
    return UG[:, J] @ code.G_J_inv


__all__ = [
    "ArbErrPublicKey",
    "ArbErrPrivateKey",
    "DecryptTrace",
    "build_qt",
    "build_g0",
    "arb_keygen",
    "arb_encrypt",
    "arb_decrypt",
    "arb_decrypt_trace",
    "arb_encrypt_batch",
    "arb_decrypt_batch",
    "random_plain",
    "uniform_error",
]

"""
Encrypting with errors of any weight
====================================

Build a (63,24) BCH code, generate a key pair for the arbitrary-error
scheme and push a few messages through it, including the all-ones
error vector.
"""

# %%
import numpy as np

from arbc import gf2
from arbc.codes import bch_build, min_distance
from arbc.scheme import arb_decrypt_trace, arb_encrypt, arb_keygen

rng = np.random.default_rng(2024)
code = bch_build(6, 7)
print(code, "d =", min_distance(code))

# %%
# The public key is a pair of matrices.  G1 has full row rank, G2 has
# rank n - k because Q T vanishes on an information set.
pk, sk = arb_keygen(code, rng)
print("rank G1 =", gf2.rank(pk.G1), " rank G2 =", gf2.rank(pk.G2))
print("QT zero on J:", gf2.select_columns(sk.QT, sk.info_set).is_zero())

# %%
# Weight 0, a typical weight, and every bit flipped.
u = rng.integers(0, 2, code.k, dtype=np.uint8)
for e in (np.zeros(63, np.uint8), rng.integers(0, 2, 63, dtype=np.uint8), np.ones(63, np.uint8)):
    c = arb_encrypt(pk, u, e)
    tr = arb_decrypt_trace(sk, c)
    print(f"wt(e)={int(e.sum()):2d}  wt(eQT)={int(tr.eQT.sum()):2d}  "
          f"eQT on J: {int(tr.eQT[list(sk.info_set)].sum())}  ok={np.array_equal(tr.u, u)}")

# %%
# Two error vectors differing by a left-kernel vector of Q give the same
# ciphertext: the message is unique, the error is only unique up to e Q.
K = gf2.left_kernel(sk.Q)
e1 = rng.integers(0, 2, 63, dtype=np.uint8)
e2 = e1 ^ K.row(0)
print("same ciphertext:", np.array_equal(arb_encrypt(pk, u, e1), arb_encrypt(pk, u, e2)))

"""
Information-set decoding, classic vs arbitrary-error keys
=========================================================
"""

# %%
import numpy as np

from arbc.attacks import isd_expected_iterations, isd_on_new_scheme_experiment, isd_prange
from arbc.classic import classic_encrypt, classic_keygen, random_error
from arbc.codes import bch_build
from arbc.scheme import arb_keygen

rng = np.random.default_rng(3)
code = bch_build(4, 2)  # (15,7), corrects 2 errors

# %%
# Against classic McEliece the attack succeeds and the average number of
# information sets tried tracks C(n,t) / C(n-k,t).
pk, _ = classic_keygen(code, 2, rng)
iters = []
for _ in range(500):
    u = rng.integers(0, 2, 7, dtype=np.uint8)
    c = classic_encrypt(pk, u, random_error(15, 2, rng))
    iters.append(isd_prange(pk.G_pub, c, 2, rng, 10_000).iterations)
tau, lg = isd_expected_iterations(15, 7, 2)
print(f"mean iterations {np.mean(iters):.2f}, expected {float(tau):.2f}")

# %%
# Against the arbitrary-error key the masked error e G2 is heavy, so no
# information set is error free and the attack stalls.
apk, _ = arb_keygen(code, rng)
report = isd_on_new_scheme_experiment(apk, 300, rng, t=2, max_iters=50)
print(report.to_text())
print("masked weight histogram:", report.weight_histogram(15).tolist())

# %%
# Large parameters, computed exactly.
for n, k, t in [(1024, 524, 50), (2048, 1751, 27), (6960, 5413, 119)]:
    print((n, k, t), f"log2 tau = {isd_expected_iterations(n, k, t)[1]:.2f}")

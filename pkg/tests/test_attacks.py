import math
from fractions import Fraction

import numpy as np
import pytest

from arbc import gf2
from arbc.attacks import (
    direct_attack_bruteforce,
    distinct_ciphertexts,
    isd_expected_iterations,
    isd_on_new_scheme_experiment,
    isd_prange,
    spectrum_experiment,
    spectrum_trial,
    syndrome_transform,
    trial_seed,
    uniqueness_check,
)
from arbc.classic import classic_encrypt, classic_keygen, random_error
from arbc.codes import bch_build, encode
from arbc.errors import DimensionTooLarge, NoSolution, NotFound
from arbc.scheme import ArbErrPublicKey, arb_decrypt, arb_encrypt, arb_keygen, uniform_error


# --- Prange ISD ------------------------------------------------------------

def test_expected_iterations_formula():
    assert isd_expected_iterations(7, 4, 0)[0] == 1
    assert isd_expected_iterations(7, 4, 1)[0] == Fraction(7, 3)
    tau, lg = isd_expected_iterations(15, 7, 2)
    assert tau == Fraction(105, 28)
    assert lg == pytest.approx(math.log2(105 / 28))
    with pytest.raises(ValueError):
        isd_expected_iterations(7, 4, 4)


def test_expected_iterations_large_exact():
    tau, lg = isd_expected_iterations(1024, 524, 50)
    assert tau == Fraction(math.comb(1024, 50), math.comb(500, 50))
    assert lg == pytest.approx(53.61, abs=0.01)


def test_isd_clean_codeword(bch15_7, rng):
    c = encode(bch15_7, np.ones(7, np.uint8))
    res = isd_prange(bch15_7.G, c, 0, rng, 10)
    assert res.iterations == 1
    assert np.array_equal(res.recovered, np.ones(7, np.uint8))


def test_isd_recovers_classic(bch15_7, rng):
    pk, _ = classic_keygen(bch15_7, 2, rng)
    for _ in range(50):
        u = rng.integers(0, 2, 7, dtype=np.uint8)
        c = classic_encrypt(pk, u, random_error(15, 2, rng))
        res = isd_prange(pk.G_pub, c, 2, rng, 10_000)
        assert np.array_equal(res.recovered, u)
        assert gf2.weight(c ^ (res.recovered @ pk.G_pub)) <= 2


def test_isd_exact_weight_flag(ham74, rng):
    c = encode(ham74, np.array([1, 0, 0, 1], np.uint8))
    with pytest.raises(NotFound) as info:
        isd_prange(ham74.G, c, 1, rng, 5, exact_weight=True)
    assert info.value.iterations == 5


def test_isd_mean_hamming(ham74, rng):
    pk, _ = classic_keygen(ham74, 1, rng)
    iters = []
    for _ in range(300):
        u = rng.integers(0, 2, 4, dtype=np.uint8)
        c = classic_encrypt(pk, u, random_error(7, 1, rng))
        iters.append(isd_prange(pk.G_pub, c, 1, rng, 1000).iterations)
    tau = 7 / 3
    assert tau / 3 <= np.mean(iters) <= 3 * tau


def test_isd_fails_on_new_scheme(bch15_7, rng):
    pk, _ = arb_keygen(bch15_7, rng)
    report = isd_on_new_scheme_experiment(pk, 200, rng, t=2, max_iters=50)
    assert report.trials == 200
    assert report.successes + report.wrong_message + report.not_found == 200
    assert report.success_rate < 0.05
    hist = report.weight_histogram(15)
    assert hist.sum() == 200
    assert 5 <= np.mean(report.masked_weights) <= 10
    assert "success_rate" in report.to_text()


def test_isd_zero_error_control(bch15_7, rng):
    pk, _ = arb_keygen(bch15_7, rng)
    report = isd_on_new_scheme_experiment(pk, 20, rng, t=2, max_iters=50, error="zero")
    assert report.successes == 20


# --- direct attack ---------------------------------------------------------

def test_direct_attack_agrees_with_decrypt(ham74, bch15_7, rng):
    for code in (ham74, bch15_7):
        pk, sk = arb_keygen(code, rng)
        for _ in range(30):
            c = arb_encrypt(pk, rng.integers(0, 2, code.k, dtype=np.uint8), uniform_error(code.n, rng))
            assert np.array_equal(direct_attack_bruteforce(pk, c), arb_decrypt(sk, c))


def test_direct_attack_message_branch(rng):
    # k < rank(G2) takes the message-enumeration branch
    code = bch_build(4, 3)  # (15,5)
    pk, sk = arb_keygen(code, rng)
    c = arb_encrypt(pk, rng.integers(0, 2, 5, dtype=np.uint8), uniform_error(15, rng))
    assert np.array_equal(direct_attack_bruteforce(pk, c), arb_decrypt(sk, c))


def test_direct_attack_no_solution(ham74, rng):
    pk, _ = arb_keygen(ham74, rng)
    degenerate = ArbErrPublicKey(pk.G1, gf2.zeros(7, 7))
    outside = next(v for v in gf2.all_vectors(7) if not any(
        np.array_equal(v, w) for w in gf2.all_vectors(4) @ pk.G1))
    with pytest.raises(NoSolution):
        direct_attack_bruteforce(degenerate, outside)


def test_direct_attack_dimension_guard(rng):
    code = bch_build(6, 3)  # (63,45): rank(G2) = 18, k = 45
    G1 = gf2.random_full_column_rank(63, 45, rng).T
    pk = ArbErrPublicKey(G1, gf2.random_matrix(63, 63, rng))
    with pytest.raises(DimensionTooLarge):
        direct_attack_bruteforce(pk, np.zeros(63, np.uint8))
    assert code.k == 45


def test_uniqueness_and_fiber_count(ham74, rng):
    pk, sk = arb_keygen(ham74, rng)
    assert uniqueness_check(pk)
    assert distinct_ciphertexts(pk) == 2**4 * 2 ** gf2.rank(sk.Q) == 2**7


def test_uniqueness_degenerate_key(ham74, rng):
    pk, _ = arb_keygen(ham74, rng)
    degenerate = ArbErrPublicKey(pk.G1, gf2.zeros(7, 7))
    assert uniqueness_check(degenerate)
    assert distinct_ciphertexts(degenerate) == 16


# --- syndrome transform and spectrum study ---------------------------------

def test_syndrome_transform_identity(bch15_7):
    assert syndrome_transform(bch15_7.H, gf2.identity(15)) == bch15_7.H


def test_syndrome_transform_rank(bch15_7, rng):
    _, sk = arb_keygen(bch15_7, rng)
    assert gf2.rank(syndrome_transform(bch15_7.H, sk.QT)) <= 8


def test_trial_seed_stable():
    assert trial_seed(7, 0) == trial_seed(7, 0)
    assert trial_seed(7, 0) != trial_seed(7, 1)
    assert trial_seed(7, 0) != trial_seed(8, 0)


def test_spectrum_trial_invariants(bch15_7):
    for i in range(10):
        tr = spectrum_trial(bch15_7, trial_seed(3, i), info_set="random")
        assert tr.k_eff == bch15_7.k + tr.zero_rows
        assert tr.spectrum.counts.sum() == 2**tr.k_eff
        assert 1 <= tr.min_distance <= 15
        assert tr.effective_params == (15, tr.k_eff)


def test_spectrum_study_small(bch15_7):
    report = spectrum_experiment(bch15_7, 12, master_seed=5, threads=1)
    groups = report.groups
    assert sum(g.count for g in groups.values()) == 12
    for (n, k), g in groups.items():
        assert g.d_min <= g.mean <= g.d_max
        assert g.variance >= 0
    lines = report.records_text().splitlines()
    assert lines[0].startswith("#") and len(lines) == 13


def test_spectrum_study_thread_independent(bch15_7):
    a = spectrum_experiment(bch15_7, 8, master_seed=1, info_set="random", threads=1)
    b = spectrum_experiment(bch15_7, 8, master_seed=1, info_set="random", threads=4)
    assert a.records_text() == b.records_text()
    assert a.aggregate_text() == b.aggregate_text()


def test_spectrum_single_trial_variance_zero(bch15_7):
    report = spectrum_experiment(bch15_7, 1, master_seed=0)
    (g,) = report.groups.values()
    assert g.count == 1 and g.variance == 0.0


def test_transformed_code_annihilated(bch15_7, rng):
    _, sk = arb_keygen(bch15_7, rng)
    Hp = syndrome_transform(bch15_7.H, sk.QT)
    tr = spectrum_trial(bch15_7, 11)
    assert tr.k_eff == 7  # information-set masks never lose rank
    assert Hp.shape == (8, 15)

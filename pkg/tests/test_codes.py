import math

import numpy as np
import pytest

from arbc import gf2
from arbc.codes import (
    GFExtField,
    bch_build,
    bch_generator_poly,
    code_from_generator,
    cyclotomic_cosets,
    encode,
    gv_bound,
    gv_bound_asymptotic,
    is_codeword,
    message_from_codeword,
    min_distance,
    minimal_polynomial,
    poly_degree,
    poly_divmod,
    poly_mul,
    repetition_code,
    weight_spectrum,
)
from arbc.errors import DimensionTooLarge, RankDeficient
from arbc.gf2 import BitMatrix


def all_codewords(code):
    return gf2.all_vectors(code.k) @ code.G


def naive_spectrum(code):
    """Encode every message separately and popcount it."""
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for u in gf2.all_vectors(code.k):
        counts[int(encode(code, u).sum())] += 1
    return counts


# --- generic codes ---------------------------------------------------------

def test_systematic_generator_info_set(rng):
    A = rng.integers(0, 2, (5, 6), dtype=np.uint8)
    code = code_from_generator(BitMatrix(np.hstack([np.eye(5, dtype=np.uint8), A])))
    assert code.info_set == (0, 1, 2, 3, 4)


def test_hamming_parity_check(ham74):
    assert ham74.H.shape == (3, 7)
    assert (ham74.G @ ham74.H.T).is_zero()
    assert gf2.rank(ham74.H) == 3
    # columns of H are the 7 distinct nonzero 3-bit vectors
    cols = {tuple(c) for c in ham74.H.to_array().T}
    assert len(cols) == 7 and (0, 0, 0) not in cols


def test_scrambled_generator_same_code(ham74, rng):
    S = gf2.random_nonsingular(4, rng)
    other = code_from_generator(S @ ham74.G)
    as_set = lambda c: {r.tobytes() for r in all_codewords(c)}  # noqa: E731
    assert as_set(other) == as_set(ham74)


def test_rank_deficient_generator():
    with pytest.raises(RankDeficient):
        code_from_generator(BitMatrix([[1, 0, 1], [1, 0, 1]]))


def test_encode_basics(ham74):
    assert not encode(ham74, np.zeros(4, np.uint8)).any()
    for i in range(4):
        e_i = np.eye(4, dtype=np.uint8)[i]
        assert np.array_equal(encode(ham74, e_i), ham74.G.row(i))


def test_encode_hamming_exhaustive(ham74):
    words = all_codewords(ham74)
    assert len({w.tobytes() for w in words}) == 16
    assert min(int(w.sum()) for w in words if w.any()) == 3


def test_message_from_codeword(bch15_7, rng):
    for _ in range(20):
        u = rng.integers(0, 2, 7, dtype=np.uint8)
        assert np.array_equal(message_from_codeword(bch15_7, encode(bch15_7, u)), u)


@pytest.mark.parametrize("m,t", [(3, 1), (4, 1), (4, 2), (4, 3), (5, 3), (5, 5)])
def test_encode_injective_small(m, t):
    code = bch_build(m, t)
    assert code.k <= 16
    assert len({w.tobytes() for w in all_codewords(code)}) == 2**code.k


# --- GF(2^m), cosets, minimal polynomials ----------------------------------

@pytest.mark.parametrize("m", range(3, 11))
def test_primitive_polys_generate_group(m):
    f = GFExtField(m)
    assert sorted(f.exp[: f.order].tolist()) == list(range(1, 2**m))


def test_non_primitive_poly_rejected():
    with pytest.raises(ValueError):
        GFExtField(4, 0b11111)  # x^4+x^3+x^2+x+1 has order 5


def test_cosets_m4():
    cosets = cyclotomic_cosets(4)
    by_rep = {min(c): c for c in cosets}
    # direct doubling mod 15
    expected = {}
    for s in (1, 3, 5, 7):
        x, seen = s, []
        while x not in seen:
            seen.append(x)
            x = 2 * x % 15
        expected[s] = tuple(sorted(seen))
    assert [len(by_rep[s]) for s in (1, 3, 5, 7)] == [4, 4, 2, 4]
    assert all(by_rep[s] == expected[s] for s in expected)
    assert sorted(x for c in cosets for x in c) == list(range(1, 15))


def test_minimal_polynomial_m4():
    f = GFExtField(4)
    assert minimal_polynomial(f, 1) == 0b10011
    prod = 0b11  # x + 1, minimal polynomial of alpha^0
    for c in cyclotomic_cosets(4):
        prod = poly_mul(prod, minimal_polynomial(f, c[0]))
    assert prod == (1 << 15) | 1


@pytest.mark.parametrize("m", range(3, 9))
def test_minimal_polys_divide_x_n_minus_1(m):
    f = GFExtField(m)
    n = 2**m - 1
    for c in cyclotomic_cosets(m):
        p = minimal_polynomial(f, c[0])
        assert poly_divmod((1 << n) | 1, p)[1] == 0
        assert m % poly_degree(p) == 0


# --- BCH -------------------------------------------------------------------

def test_bch_15_11_is_hamming_like():
    code = bch_build(4, 1)
    assert (code.n, code.k) == (15, 11)
    assert bch_generator_poly(4, 1) == 0b10011


@pytest.mark.parametrize("m,t,k", [(6, 7, 24), (7, 9, 71), (8, 27, 79), (10, 103, 268)])
def test_bch_dimensions(m, t, k):
    code = bch_build(m, t)
    assert (code.n, code.k) == (2**m - 1, k)


def test_bch_invalid_parameters():
    with pytest.raises(ValueError):
        bch_build(2, 1)
    with pytest.raises(ValueError):
        bch_build(4, 8)


@pytest.mark.parametrize("m,t", [(4, 2), (5, 2), (6, 7)])
def test_bch_codewords_divisible_by_g(m, t, rng):
    code = bch_build(m, t)
    g = bch_generator_poly(m, t)
    assert (code.G @ code.H.T).is_zero()
    for _ in range(20):
        c = encode(code, rng.integers(0, 2, code.k, dtype=np.uint8))
        poly = sum(int(b) << j for j, b in enumerate(c))
        assert poly_divmod(poly, g)[1] == 0


@pytest.mark.parametrize("m,t", [(3, 1), (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3), (6, 10), (6, 7)])
def test_bch_distance_meets_design(m, t):
    code = bch_build(m, t)
    assert min_distance(code) >= 2 * t + 1


# --- min distance and spectra -----------------------------------------------

def test_min_distance_values(ham74, bch15_7, bch63_24):
    assert min_distance(ham74) == 3
    assert min_distance(bch15_7) == 5
    assert min_distance(bch63_24) == 15


@pytest.mark.parametrize("m,t", [(4, 1), (4, 2), (5, 3), (5, 5), (6, 11)])
def test_gray_enumeration_matches_naive(m, t):
    code = bch_build(m, t)
    assert np.array_equal(weight_spectrum(code).counts, naive_spectrum(code))


def test_min_distance_limit():
    code = bch_build(7, 9)
    with pytest.raises(DimensionTooLarge):
        min_distance(code)


def test_hamming_spectrum(ham74):
    assert weight_spectrum(ham74).counts.tolist() == [1, 0, 0, 7, 7, 0, 0, 1]
    assert np.array_equal(naive_spectrum(ham74), [1, 0, 0, 7, 7, 0, 0, 1])


def test_repetition_spectrum():
    s = weight_spectrum(repetition_code(5))
    assert s.counts.tolist() == [1, 0, 0, 0, 0, 1]


def test_bch63_spectrum_shape(bch63_24):
    s = weight_spectrum(bch63_24)
    assert s.counts.sum() == 2**24
    assert s.counts[1:15].sum() == 0
    assert s.counts[15] > 0
    # symmetric: the all-ones word is a codeword of this cyclic code
    assert np.array_equal(s.counts, s.counts[::-1])
    peak = int(np.argmax(s.counts))
    assert 28 <= peak <= 35


def test_spectrum_thread_independent(bch63_24):
    a = weight_spectrum(bch63_24, threads=1).counts
    b = weight_spectrum(bch63_24, threads=4).counts
    assert np.array_equal(a, b)


def test_sampled_spectrum(bch15_7, rng):
    s = weight_spectrum(bch15_7, mode="sampled", size=20000, rng=rng)
    exact = weight_spectrum(bch15_7).counts
    assert s.method == "sampled" and s.sample_size == 20000
    assert s.counts.sum() == pytest.approx(2**7)
    assert np.all(s.counts[exact == 0] == 0)
    assert np.allclose(s.counts, exact, atol=6)


def test_spectrum_text_export(ham74):
    text = weight_spectrum(ham74).to_text().splitlines()
    assert text[3] == "3 7" and len(text) == 8


def test_is_codeword(ham74):
    assert is_codeword(ham74, ham74.G.row(2))
    assert not is_codeword(ham74, np.eye(7, dtype=np.uint8)[0])


# --- Gilbert-Varshamov -----------------------------------------------------

def gv_oracle(n, k):
    best = 1
    for d in range(2, n + 1):
        if sum(math.comb(n - 1, i) for i in range(d - 1)) < 2 ** (n - k):
            best = d
    return best


@pytest.mark.parametrize("n", [3, 7, 15, 63])
def test_gv_single_parity(n):
    assert gv_bound(n, n - 1) == 2


def test_gv_values_against_oracle():
    for n, k in [(63, 24), (63, 25), (63, 26), (15, 7), (31, 16), (7, 4)]:
        assert gv_bound(n, k) == gv_oracle(n, k)
    assert gv_bound(63, 24) == 12


def test_gv_monotone():
    for n in (15, 31, 63):
        vals = [gv_bound(n, k) for k in range(1, n)]
        assert all(a >= b for a, b in zip(vals, vals[1:]))
    assert gv_bound(63, 26) <= gv_bound(63, 24)


def test_gv_asymptotic_values():
    # relative-distance form; close to the fractional values tabulated for the (63,k) study
    got = [gv_bound_asymptotic(63, k) for k in (24, 25, 26)]
    assert got == pytest.approx([9.66, 9.26, 8.87], abs=0.05)
    assert got[0] > got[1] > got[2]

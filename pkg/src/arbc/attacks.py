"""Attacks and security experiments.

* Prange information-set decoding and its expected iteration count.
* Exhaustive direct attack on the arbitrary-error scheme plus an
  exhaustive check that no ciphertext has two preimage messages.
* ISD run against the arbitrary-error public key, which should fail.
* The syndrome-transform study: the attacker's parity checks
  ``H (QT)^T`` define a new code whose spectrum and minimum distance
  are measured over many random masking matrices.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import gf2
from ._enum import thread_count
from .codes import (
    EXHAUSTIVE_MAX_K,
    WeightSpectrum,
    code_from_parity_check,
    gv_bound,
    gv_bound_asymptotic,
    weight_spectrum,
)
from .errors import (
    DimensionTooLarge,
    MultipleSolutions,
    NoSolution,
    NotFound,
    SingularMatrix,
)
from .scheme import arb_encrypt, build_qt, random_plain, uniform_error

DIRECT_MAX_DIM = 20


# --- information-set decoding ----------------------------------------------

@dataclass(frozen=True)
class IsdResult:
    recovered: np.ndarray
    iterations: int
    elapsed: float
    singular_draws: int = 0


def isd_prange(G_pub, c, t, rng, max_iters, exact_weight=False):
    """Plain information-set decoding of ``c`` under generator ``G_pub``.

    Each iteration draws k random positions, solves for the message on
    them and accepts when the residual has weight <= t (``== t`` with
    ``exact_weight``).  Draws with a singular column subset are retried
    without counting as an iteration.
    """
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    k, n = G_pub.shape
    c = gf2.as_bits(c, n)
    start = time.perf_counter()
    iterations = 0
    singular = 0
    while iterations < max_iters:
        J = np.sort(rng.choice(n, size=k, replace=False))
        try:
            GJ_inv = gf2.inverse(gf2.select_columns(G_pub, J))
        except SingularMatrix:
            singular += 1
            if singular > 64 * max_iters:
                break
            continue
        iterations += 1
        u = c[J] @ GJ_inv
        w = gf2.weight(c ^ (u @ G_pub))
        if w == t if exact_weight else w <= t:
            return IsdResult(u, iterations, time.perf_counter() - start, singular)
    raise NotFound(iterations)


def isd_expected_iterations(n, k, t):
    """Expected Prange iterations ``C(n, t) / C(n-k, t)`` and its log2."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got ({n}, {k})")
    if not 0 <= t <= n - k:
        raise ValueError(f"need 0 <= t <= n-k, got t={t}")
    num = math.comb(n, t)
    den = math.comb(n - k, t)
    return Fraction(num, den), math.log2(num) - math.log2(den)


# --- direct attack ---------------------------------------------------------

def _to_ints(rows):
    """Pack 0/1 rows (n <= 62) into int64 codes, bit j = column j."""
    rows = np.asarray(rows, dtype=np.int64)
    return (rows << np.arange(rows.shape[-1], dtype=np.int64)).sum(axis=-1)


def _reduce_against(words, basis, pivots):
    """Reduce packed rows modulo the row space of an RREF basis, in place."""
    one = np.uint64(1)
    for i, col in enumerate(pivots):
        bits = (words[:, col >> 6] >> np.uint64(col & 63)) & one
        hit = bits.astype(bool)
        words[hit] ^= basis.words[i]
    return words


def _in_row_space(vectors, M):
    R, pivots = gf2.row_reduce(M)
    words = gf2.pack_rows(vectors, cols=M.cols)
    _reduce_against(words, R, pivots)
    return ~words.any(axis=1)


def direct_attack_bruteforce(pk, c):
    """Find the unique message of ``c`` using only the public key.

    Enumerates the smaller of the two spaces: all 2^k messages (testing
    ``c - u G1`` against the row space of ``G2``) or all 2^r masked errors
    spanned by ``G2`` (testing ``c - v`` against the row space of ``G1``).
    """
    k, n = pk.G1.shape
    c = gf2.as_bits(c, n)
    R2, piv2 = gf2.row_reduce(pk.G2)
    r = len(piv2)
    if min(k, r) > DIRECT_MAX_DIM:
        raise DimensionTooLarge(f"min(k, rank G2) = {min(k, r)} exceeds {DIRECT_MAX_DIM}")
    if k <= r:
        U = gf2.all_vectors(k)
        hits = _in_row_space((U @ pk.G1) ^ c, pk.G2)
        solutions = U[hits]
    else:
        basis = gf2.BitMatrix.from_words(R2.words[:r], n)
        residues = (gf2.all_vectors(r) @ basis) ^ c
        hits = _in_row_space(residues, pk.G1)
        _, piv1 = gf2.row_reduce(pk.G1)
        G1J_inv = gf2.inverse(gf2.select_columns(pk.G1, piv1))
        solutions = residues[hits][:, piv1] @ G1J_inv
        if len(solutions):
            solutions = np.unique(solutions, axis=0)
    if len(solutions) == 0:
        raise NoSolution("ciphertext is not of the form u G1 + e G2")
    if len(solutions) > 1:
        raise MultipleSolutions(f"{len(solutions)} messages explain the ciphertext")
    return solutions[0]


def _ciphertext_table(pk):
    k, n = pk.G1.shape
    if k > 7 or n > 15:
        raise DimensionTooLarge("exhaustive fiber enumeration needs k <= 7 and n <= 15")
    cu = _to_ints(gf2.all_vectors(k) @ pk.G1)
    ce = _to_ints(gf2.all_vectors(n) @ pk.G2)
    return cu[:, None] ^ ce[None, :]


def uniqueness_check(pk):
    """True iff no ciphertext arises from two different messages.

    Enumerates every (u, e) pair; row ``u`` of the table holds the
    ciphertexts reachable from message ``u``.
    """
    table = _ciphertext_table(pk)
    per_message = [np.unique(row) for row in table]
    merged = np.concatenate(per_message)
    return np.unique(merged).size == merged.size


def distinct_ciphertexts(pk):
    """Number of distinct ciphertexts over all 2^(k+n) (u, e) pairs."""
    return int(np.unique(_ciphertext_table(pk)).size)


# --- ISD against the arbitrary-error scheme ---------------------------------

@dataclass
class IsdExperimentReport:
    trials: int
    t: int
    max_iters: int
    successes: int = 0
    wrong_message: int = 0
    not_found: int = 0
    iterations: list = field(default_factory=list)
    masked_weights: list = field(default_factory=list)

    @property
    def success_rate(self):
        return self.successes / self.trials if self.trials else 0.0

    def weight_histogram(self, n):
        return np.bincount(np.asarray(self.masked_weights, dtype=np.int64), minlength=n + 1)

    def to_text(self):
        mean_w = float(np.mean(self.masked_weights)) if self.masked_weights else 0.0
        return "\n".join(
            [
                f"trials {self.trials}",
                f"t {self.t}",
                f"max_iters {self.max_iters}",
                f"success {self.successes}",
                f"wrong_message {self.wrong_message}",
                f"not_found {self.not_found}",
                f"success_rate {self.success_rate:.4f}",
                f"mean_masked_error_weight {mean_w:.3f}",
            ]
        )


def isd_on_new_scheme_experiment(pk, trials, rng, t=2, max_iters=100, error="uniform"):
    """Run ISD against ``G1`` with ``e G2`` playing the channel error.

    ``error="zero"`` encrypts without error as a control, where ISD
    must succeed.
    """
    report = IsdExperimentReport(trials=trials, t=t, max_iters=max_iters)
    for _ in range(trials):
        u = random_plain(pk.k, rng)
        if error == "uniform":
            e = uniform_error(pk.n, rng)
        elif error == "zero":
            e = np.zeros(pk.n, dtype=np.uint8)
        else:
            raise ValueError(f"unknown error model {error!r}")
        report.masked_weights.append(gf2.weight(e @ pk.G2))
        c = arb_encrypt(pk, u, e)
        try:
            res = isd_prange(pk.G1, c, t, rng, max_iters)
        except NotFound as exc:
            report.not_found += 1
            report.iterations.append(exc.iterations)
            continue
        report.iterations.append(res.iterations)
        if np.array_equal(res.recovered, u):
            report.successes += 1
        else:
            report.wrong_message += 1
    return report


# --- syndrome-transform spectrum study --------------------------------------

def syndrome_transform(H, QT):
    """Parity checks ``H (QT)^T`` seen by a syndrome-based attacker."""
    return H @ QT.T


@dataclass(frozen=True, eq=False)
class SpectrumTrialReport:
    trial_seed: int
    zero_rows: int
    n: int
    k_eff: int
    min_distance: int
    spectrum: WeightSpectrum

    @property
    def effective_params(self):
        return (self.n, self.k_eff)


@dataclass(frozen=True)
class GroupStats:
    n: int
    k: int
    count: int
    d_min: int
    d_max: int
    mean: float
    variance: float
    gv_bound: int
    gv_asymptotic: float


@dataclass(frozen=True, eq=False)
class SpectrumStudyReport:
    master_seed: int
    trials: list
    variance_kind: str = "population"

    @property
    def groups(self):
        out = {}
        for k_eff in sorted({tr.k_eff for tr in self.trials}):
            members = [tr for tr in self.trials if tr.k_eff == k_eff]
            d = np.array([tr.min_distance for tr in members], dtype=np.float64)
            n = members[0].n
            out[(n, k_eff)] = GroupStats(
                n=n,
                k=k_eff,
                count=len(members),
                d_min=int(d.min()),
                d_max=int(d.max()),
                mean=float(d.mean()),
                variance=float(d.var()),
                gv_bound=gv_bound(n, k_eff),
                gv_asymptotic=gv_bound_asymptotic(n, k_eff),
            )
        return out

    def records_text(self):
        lines = ["# trial seed z n k_eff d_min"]
        lines += [
            f"{i} {tr.trial_seed} {tr.zero_rows} {tr.n} {tr.k_eff} {tr.min_distance}"
            for i, tr in enumerate(self.trials)
        ]
        return "\n".join(lines)

    def aggregate_text(self):
        lines = [
            f"# master_seed {self.master_seed} trials {len(self.trials)} variance {self.variance_kind}",
            f"{'code':<10} {'#':>4} {'min':>4} {'max':>4} {'average':>8} {'variance':>9} {'GV':>4} {'GV-asym':>8}",
        ]
        for (n, k), g in self.groups.items():
            lines.append(
                f"{f'({n},{k})':<10} {g.count:>4} {g.d_min:>4} {g.d_max:>4} "
                f"{g.mean:>8.2f} {g.variance:>9.2f} {g.gv_bound:>4} {g.gv_asymptotic:>8.2f}"
            )
        return "\n".join(lines)


def trial_seed(master_seed, index):
    """Per-trial seed derived from the master seed and the trial index."""
    ss = np.random.SeedSequence([int(master_seed), int(index)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def spectrum_trial(code, seed, info_set=None):
    """One random masking matrix: transformed code, its spectrum and distance."""
    rng = np.random.default_rng(seed)
    if info_set is None:
        J = code.info_set
    elif isinstance(info_set, str) and info_set == "random":
        J = tuple(int(x) for x in np.sort(rng.choice(code.n, size=code.k, replace=False)))
    else:
        J = tuple(info_set)
    T = gf2.random_nonsingular(code.n, rng)
    Q = build_qt(T, J, rng)
    Hp = syndrome_transform(code.H, Q @ T)
    zero_rows = Hp.rows - gf2.rank(Hp)
    k_eff = code.k + zero_rows
    derived = code_from_parity_check(Hp)
    assert derived.k == k_eff
    # rank loss is rare beyond three rows; 2^(k+4) codewords stay cheap
    spectrum = weight_spectrum(derived, threads=1, limit=max(EXHAUSTIVE_MAX_K, code.k + 4))
    return SpectrumTrialReport(
        trial_seed=seed,
        zero_rows=zero_rows,
        n=code.n,
        k_eff=k_eff,
        min_distance=spectrum.min_distance,
        spectrum=spectrum,
    )


def spectrum_experiment(code, trials, master_seed, info_set=None, threads=None):
    """Measure codes defined by ``H (QT)^T`` over ``trials`` random masks.

    ``info_set`` overrides the positions on which ``QT`` vanishes; by
    default the code's own information set is used, as in key generation.
    ``info_set="random"`` draws a fresh k-subset per trial, which in general
    is not an information set and so lets ``H (QT)^T`` lose rank.
    Results are ordered by trial index and do not depend on ``threads``.
    """
    if code.k + 2 > EXHAUSTIVE_MAX_K:
        raise DimensionTooLarge(f"k+2={code.k + 2} exceeds {EXHAUSTIVE_MAX_K}")
    seeds = [trial_seed(master_seed, i) for i in range(trials)]
    threads = thread_count() if threads is None else threads
    if threads <= 1:
        reports = [spectrum_trial(code, s, info_set) for s in seeds]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda s: spectrum_trial(code, s, info_set), seeds))
    return SpectrumStudyReport(master_seed=master_seed, trials=reports)

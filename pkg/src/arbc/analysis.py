"""Public-key sizes and workfactors for classic and arbitrary-error McEliece.

Classic keys cost ``k (n - k)`` bits (systematic public generator) and are
priced by the Prange iteration count.  Arbitrary-error keys cost
``n^2 + k (n - k)`` bits and are priced by the direct attack,
``2^min(k, n-k)``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .attacks import isd_expected_iterations


@dataclass(frozen=True)
class ParameterPoint:
    n: int
    k: int
    t: int
    scheme: str  # "classic" or "arbitrary-error"

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got ({self.n}, {self.k})")
        if self.t < 0:
            raise ValueError("t must be nonnegative")
        if self.scheme not in ("classic", "arbitrary-error"):
            raise ValueError(f"unknown scheme {self.scheme!r}")


def _check(n, k):
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got ({n}, {k})")


def classic_key_bits(n, k):
    _check(n, k)
    return k * (n - k)


def new_key_bits(n, k):
    _check(n, k)
    return n * n + k * (n - k)


def new_workfactor_log2(n, k):
    _check(n, k)
    return float(min(k, n - k))


def classic_workfactor_log2(n, k, t):
    return isd_expected_iterations(n, k, t)[1]


def key_bits(point):
    if point.scheme == "classic":
        return classic_key_bits(point.n, point.k)
    return new_key_bits(point.n, point.k)


def workfactor_log2(point):
    if point.scheme == "classic":
        return classic_workfactor_log2(point.n, point.k, point.t)
    return new_workfactor_log2(point.n, point.k)


@dataclass(frozen=True)
class ComparisonRow:
    classic_point: ParameterPoint
    new_point: ParameterPoint
    classic_key_bits: int
    new_key_bits: int
    classic_workfactor: float
    new_workfactor: float
    ratio: float
    reference_new_key_bits: int | None = None


def comparison_table(pairs, reference_key_bits=None):
    """One :class:`ComparisonRow` per (classic, arbitrary-error) pair.

    ``reference_key_bits`` optionally lists externally quoted key sizes for
    the arbitrary-error side, carried alongside the computed value.
    """
    refs = list(reference_key_bits) if reference_key_bits is not None else [None] * len(pairs)
    rows = []
    for (cp, np_), ref in zip(pairs, refs):
        ck = key_bits(cp)
        nk = key_bits(np_)
        rows.append(
            ComparisonRow(
                classic_point=cp,
                new_point=np_,
                classic_key_bits=ck,
                new_key_bits=nk,
                classic_workfactor=workfactor_log2(cp),
                new_workfactor=workfactor_log2(np_),
                ratio=ck / nk,
                reference_new_key_bits=ref,
            )
        )
    return rows


# classic parameters paired with the BCH codes of matching workfactor
REFERENCE_PAIRINGS = [
    (ParameterPoint(1024, 524, 50, "classic"), ParameterPoint(127, 71, 9, "arbitrary-error")),
    (ParameterPoint(2048, 1751, 27, "classic"), ParameterPoint(255, 79, 27, "arbitrary-error")),
    (ParameterPoint(6960, 5413, 119, "classic"), ParameterPoint(1023, 268, 103, "arbitrary-error")),
]
# quoted arbitrary-error key sizes for the pairings above; the third equals
# n^2 + n(n-k) rather than n^2 + k(n-k)
REFERENCE_NEW_KEY_BITS = [20105, 78929, 1818894]


def reference_table():
    return comparison_table(REFERENCE_PAIRINGS, REFERENCE_NEW_KEY_BITS)


def _fmt_point(p):
    return f"({p.n},{p.k},{p.t})"


def format_table(rows, fmt="text"):
    """Render comparison rows as aligned text or JSON records (one per line)."""
    if fmt == "records":
        return "\n".join(json.dumps(asdict(r), sort_keys=True) for r in rows)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    header = (
        f"{'classic':<18} {'key bits':>10} {'log2 WF':>8}   "
        f"{'arb-error':<16} {'key bits':>10} {'log2 WF':>8} {'ratio':>7} {'quoted':>10}"
    )
    lines = [header]
    for r in rows:
        ref = "" if r.reference_new_key_bits is None else str(r.reference_new_key_bits)
        lines.append(
            f"{_fmt_point(r.classic_point):<18} {r.classic_key_bits:>10} {r.classic_workfactor:>8.2f}   "
            f"{_fmt_point(r.new_point):<16} {r.new_key_bits:>10} {r.new_workfactor:>8.0f} "
            f"{r.ratio:>7.2f} {ref:>10}"
        )
    return "\n".join(lines)

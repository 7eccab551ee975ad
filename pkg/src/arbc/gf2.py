"""Dense linear algebra over GF(2).

Matrices are stored as rows of bits packed little-endian into ``uint64``
words: column ``j`` lives in word ``j // 64`` at bit ``j % 64``.  Row
reduction works on whole words with XOR, so a pivot step costs one
vectorised XOR over every row that has the pivot bit set.

Vectors are plain ``numpy.uint8`` arrays of zeros and ones.  ``v @ A``
with such a vector (or a 2-D stack of them) on the left returns the
product as another dense 0/1 array.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, SingularMatrix

__all__ = [
    "BitMatrix",
    "identity",
    "zeros",
    "mat_mul",
    "rank",
    "row_reduce",
    "inverse",
    "left_kernel",
    "right_kernel",
    "select_columns",
    "vstack",
    "all_vectors",
    "random_matrix",
    "random_nonsingular",
    "random_full_column_rank",
    "random_permutation_matrix",
    "weight",
    "as_bits",
    "pack_rows",
    "bits_to_hex",
    "hex_to_bits",
    "matrix_to_text",
    "matrix_from_text",
]

_ONE = np.uint64(1)


def _nwords(cols):
    return max(1, (cols + 63) // 64)


def pack_rows(dense, cols=None):
    """Pack a 2-D 0/1 array into ``(rows, nwords)`` uint64 words."""
    dense = np.asarray(dense, dtype=np.uint8)
    if dense.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D array, got shape {dense.shape}")
    rows = dense.shape[0]
    cols = dense.shape[1] if cols is None else cols
    width = _nwords(cols) * 64
    buf = np.zeros((rows, width), dtype=np.uint8)
    buf[:, : dense.shape[1]] = dense & 1
    packed = np.packbits(buf, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def _unpack_rows(words, cols):
    raw = np.ascontiguousarray(words.astype("<u8")).view(np.uint8)
    return np.unpackbits(raw, axis=-1, bitorder="little")[..., :cols]


def as_bits(v, length=None):
    """Coerce ``v`` to a 1-D uint8 0/1 vector, optionally checking its length."""
    arr = np.asarray(v, dtype=np.uint8).reshape(-1)
    if np.any(arr > 1):
        raise ValueError("bit vectors must contain only 0 and 1")
    if length is not None and arr.shape[0] != length:
        raise DimensionMismatch(f"expected length {length}, got {arr.shape[0]}")
    return arr


def weight(v):
    """Hamming weight of a 0/1 vector (or row weights of a 2-D stack)."""
    arr = np.asarray(v, dtype=np.uint8)
    return int(arr.sum()) if arr.ndim == 1 else arr.sum(axis=-1).astype(np.int64)


class BitMatrix:
    """Immutable dense matrix over GF(2) with bit-packed rows.

    Construct from any 2-D array-like of zeros and ones::

        >>> A = BitMatrix([[1, 1], [0, 1]])
        >>> (A @ A).to_array().tolist()
        [[1, 0], [0, 1]]
    """

    __slots__ = ("_words", "_rows", "_cols")
    # numpy defers ``ndarray @ BitMatrix`` to __rmatmul__
    __array_ufunc__ = None

    def __init__(self, data, cols=None):
        dense = np.asarray(data, dtype=np.uint8)
        if dense.ndim != 2:
            if dense.size == 0 and cols is not None:
                dense = dense.reshape(0, cols)
            else:
                raise DimensionMismatch(f"expected a 2-D array, got shape {dense.shape}")
        if np.any(dense > 1):
            raise ValueError("matrix entries must be 0 or 1")
        self._set(pack_rows(dense), dense.shape[0], dense.shape[1])

    def _set(self, words, rows, cols):
        words = np.ascontiguousarray(words, dtype=np.uint64)
        words.setflags(write=False)
        self._words = words
        self._rows = rows
        self._cols = cols

    @classmethod
    def from_words(cls, words, cols):
        """Wrap already packed words; padding bits beyond ``cols`` must be zero."""
        obj = cls.__new__(cls)
        words = np.array(words, dtype=np.uint64, copy=True).reshape(-1, _nwords(cols))
        obj._set(words, words.shape[0], cols)
        return obj

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    @property
    def shape(self):
        return (self._rows, self._cols)

    @property
    def words(self):
        return self._words

    def to_array(self):
        return _unpack_rows(self._words, self._cols)

    def row(self, i):
        return _unpack_rows(self._words[i], self._cols)

    @property
    def T(self):
        return BitMatrix(self.to_array().T)

    def is_zero(self):
        return not self._words.any()

    def __matmul__(self, other):
        if isinstance(other, BitMatrix):
            return mat_mul(self, other)
        return NotImplemented

    def __rmatmul__(self, v):
        v = np.asarray(v, dtype=np.uint8)
        if v.shape[-1] != self._rows:
            raise DimensionMismatch(f"vector length {v.shape[-1]} != {self._rows} rows")
        if v.ndim == 1:
            acc = np.bitwise_xor.reduce(self._words[v.astype(bool)], axis=0)
            return _unpack_rows(acc, self._cols)
        batch = v.reshape(int(np.prod(v.shape[:-1])), self._rows)
        if self._rows == 0:
            return np.zeros(v.shape[:-1] + (self._cols,), dtype=np.uint8)
        acc = _combine_rows(batch, self._words)
        return _unpack_rows(acc, self._cols).reshape(v.shape[:-1] + (self._cols,))

    def __add__(self, other):
        if not isinstance(other, BitMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return BitMatrix.from_words(self._words ^ other._words, self._cols)

    __xor__ = __add__
    __sub__ = __add__

    def __eq__(self, other):
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._words, other._words)

    def __hash__(self):
        return hash((self._rows, self._cols, self._words.tobytes()))

    def __repr__(self):
        if self._rows * self._cols <= 256:
            body = "\n".join(" " + "".join(map(str, r)) for r in self.to_array())
            return f"BitMatrix({self._rows}x{self._cols}\n{body})"
        return f"BitMatrix({self._rows}x{self._cols})"


def _combine_rows(selector, words):
    """XOR-combine ``words`` rows chosen by each row of the 0/1 ``selector``."""
    out = np.zeros((selector.shape[0], words.shape[1]), dtype=np.uint64)
    sel = selector.astype(bool)
    for i in range(words.shape[0]):
        out[sel[:, i]] ^= words[i]
    return out


def identity(n):
    return BitMatrix(np.eye(n, dtype=np.uint8))


def zeros(rows, cols):
    return BitMatrix.from_words(np.zeros((rows, _nwords(cols)), np.uint64), cols)


def vstack(mats):
    cols = {m.cols for m in mats}
    if len(cols) != 1:
        raise DimensionMismatch("vstack needs equal column counts")
    return BitMatrix.from_words(np.vstack([m.words for m in mats]), cols.pop())


def mat_mul(a, b):
    """GF(2) product ``a @ b``."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return BitMatrix.from_words(_combine_rows(a.to_array(), b.words), b.cols)


def _eliminate(words, pivot_cols):
    """Reduce packed ``words`` in place to reduced row echelon form.

    Pivots are searched only in the first ``pivot_cols`` columns, first
    nonzero entry in column order.  Returns the list of pivot columns.
    """
    nrows = words.shape[0]
    pivots = []
    r = 0
    for col in range(pivot_cols):
        if r == nrows:
            break
        w = col >> 6
        shift = np.uint64(col & 63)
        bits = (words[:, w] >> shift) & _ONE
        below = np.flatnonzero(bits[r:])
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            words[[r, p]] = words[[p, r]]
            bits[[r, p]] = bits[[p, r]]
        bits[r] = 0
        hit = np.flatnonzero(bits)
        if hit.size:
            words[hit] ^= words[r]
        pivots.append(col)
        r += 1
    return pivots


def row_reduce(a):
    """Return ``(R, pivots)`` with ``R`` the reduced row echelon form of ``a``."""
    words = np.array(a.words, copy=True)
    pivots = _eliminate(words, a.cols)
    return BitMatrix.from_words(words, a.cols), pivots


def rank(a):
    words = np.array(a.words, copy=True)
    return len(_eliminate(words, a.cols))


def _augment_identity(a):
    eye = pack_rows(np.eye(a.rows, dtype=np.uint8))
    return np.hstack([a.words, eye]), a.words.shape[1]


def inverse(a):
    """Inverse of a square matrix; raises ``SingularMatrix`` when rank < n."""
    if a.rows != a.cols:
        raise DimensionMismatch(f"inverse of non-square {a.shape}")
    aug, wa = _augment_identity(a)
    pivots = _eliminate(aug, a.cols)
    if len(pivots) < a.rows:
        raise SingularMatrix(f"matrix has rank {len(pivots)} < {a.rows}")
    return BitMatrix.from_words(aug[:, wa:], a.rows)


def left_kernel(a):
    """Basis (as rows) of ``{x : x @ a = 0}``; has ``a.rows - rank(a)`` rows."""
    aug, wa = _augment_identity(a)
    r = len(_eliminate(aug, a.cols))
    basis = BitMatrix.from_words(aug[r:, wa:], a.rows)
    if basis.rows:
        basis, _ = row_reduce(basis)
    return basis


def right_kernel(a):
    """Basis (as rows) of ``{x : a @ x^T = 0}``."""
    return left_kernel(a.T)


def select_columns(a, j):
    """Columns of ``a`` at the indices ``j``, in the given order."""
    idx = np.asarray(j, dtype=np.int64).reshape(-1)
    if idx.size and (idx.min() < 0 or idx.max() >= a.cols):
        raise IndexError(f"column index out of range for {a.cols} columns")
    return BitMatrix(a.to_array()[:, idx], cols=idx.size)


def all_vectors(length):
    """All 2^length vectors as rows; row i is the binary expansion of i, bit 0 first."""
    idx = np.arange(1 << length, dtype=np.int64)
    return ((idx[:, None] >> np.arange(length)) & 1).astype(np.uint8)


def random_matrix(rows, cols, rng):
    return BitMatrix(rng.integers(0, 2, size=(rows, cols), dtype=np.uint8), cols=cols)


def random_nonsingular(n, rng):
    """Uniform nonsingular n x n matrix by rejection sampling."""
    if n < 1:
        raise ValueError("n must be positive")
    while True:
        m = random_matrix(n, n, rng)
        if rank(m) == n:
            return m


def random_full_column_rank(rows, cols, rng):
    """Uniform ``rows x cols`` matrix of rank ``cols`` by rejection sampling."""
    if cols < 1 or rows < cols:
        raise ValueError(f"need rows >= cols >= 1, got {rows}x{cols}")
    if rows == cols:
        return random_nonsingular(rows, rng)
    while True:
        m = random_matrix(rows, cols, rng)
        if rank(m) == cols:
            return m


def random_permutation_matrix(n, rng):
    perm = rng.permutation(n)
    dense = np.zeros((n, n), dtype=np.uint8)
    dense[np.arange(n), perm] = 1
    return BitMatrix(dense)


# --- text encoding ---------------------------------------------------------

def bits_to_hex(v):
    """Hex string of a bit vector, first bit most significant, zero padded
    on the right to a whole number of nibbles."""
    v = as_bits(v)
    digits = (v.size + 3) // 4
    return np.packbits(v, bitorder="big").tobytes().hex()[:digits]


def hex_to_bits(text, length):
    """Inverse of :func:`bits_to_hex` for a vector of known ``length``."""
    s = text.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    digits = (length + 3) // 4
    if len(s) != digits:
        raise ValueError(f"expected {digits} hex digits for {length} bits, got {len(s)}")
    try:
        raw = bytes.fromhex(s + "0" * (len(s) % 2))
    except ValueError as exc:
        raise ValueError(f"invalid hex string {text!r}") from exc
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="big")
    if bits[length:].any():
        raise ValueError("nonzero padding bits in hex vector")
    return bits[:length].copy()


def matrix_to_text(a):
    """Header ``rows cols`` followed by one hex line per row."""
    lines = [f"{a.rows} {a.cols}"]
    lines.extend(bits_to_hex(r) for r in a.to_array())
    return "\n".join(lines)


def matrix_from_text(lines):
    """Parse the format written by :func:`matrix_to_text` from a list of lines."""
    rows, cols = (int(x) for x in lines[0].split())
    body = lines[1 : rows + 1]
    if len(body) != rows:
        raise ValueError(f"expected {rows} matrix rows, got {len(body)}")
    dense = np.array([hex_to_bits(x, cols) for x in body], dtype=np.uint8).reshape(rows, cols)
    return BitMatrix(dense, cols=cols)

"""Text envelopes for keys and ciphertexts.

Every file starts with the magic line ``ARBC1`` followed by ``scheme``,
``role`` and ``params`` lines, then the payload, then ``end``::

    ARBC1
    scheme arberr
    role public
    params n=7 k=4
    matrix G1
    4 7
    b
    ...
    end

Matrices use the ``rows cols`` + hex-row encoding of :mod:`arbc.gf2`.
Private keys store only source matrices; inverses are recomputed on load.
"""

from __future__ import annotations

from pathlib import Path

from . import gf2
from .classic import ClassicPrivateKey, ClassicPublicKey
from .codes import code_from_generator
from .errors import ArbcError, FormatError
from .scheme import ArbErrPrivateKey, ArbErrPublicKey

MAGIC = "ARBC1"

_PAYLOAD = {
    ("classic", "public"): ["G_pub"],
    ("classic", "private"): ["S", "G", "P"],
    ("arberr", "public"): ["G1", "G2"],
    ("arberr", "private"): ["G", "M", "T", "Q", "G0"],
}


def scheme_of(key):
    if isinstance(key, (ClassicPublicKey, ClassicPrivateKey)):
        return "classic"
    if isinstance(key, (ArbErrPublicKey, ArbErrPrivateKey)):
        return "arberr"
    raise TypeError(f"not a key: {type(key).__name__}")


def role_of(key):
    return "private" if isinstance(key, (ClassicPrivateKey, ArbErrPrivateKey)) else "public"


def _params_line(params):
    return "params " + " ".join(f"{k}={v}" for k, v in params.items())


def _header(scheme, role, params):
    return [MAGIC, f"scheme {scheme}", f"role {role}", _params_line(params)]


def dump_key(key):
    scheme, role = scheme_of(key), role_of(key)
    if scheme == "classic" and role == "public":
        params = {"n": key.n, "k": key.k, "t": key.t}
        mats = {"G_pub": key.G_pub}
    elif scheme == "classic":
        params = {"n": key.code.n, "k": key.code.k, "t": key.t}
        mats = {"S": key.S, "G": key.code.G, "P": key.P}
    elif role == "public":
        params = {"n": key.n, "k": key.k}
        mats = {"G1": key.G1, "G2": key.G2}
    else:
        params = {"n": key.code.n, "k": key.code.k}
        mats = {"G": key.code.G, "M": key.M, "T": key.T, "Q": key.Q, "G0": key.G0}
    lines = _header(scheme, role, params)
    for name in _PAYLOAD[(scheme, role)]:
        lines.append(f"matrix {name}")
        lines.append(gf2.matrix_to_text(mats[name]))
    if scheme == "arberr" and role == "private":
        lines.append("infoset " + " ".join(str(j) for j in key.code.info_set))
    lines.append("end")
    return "\n".join(lines) + "\n"


def _parse_header(lines):
    if len(lines) < 4 or lines[0] != MAGIC:
        raise FormatError(f"missing {MAGIC} magic line")
    fields = {}
    for line, name in zip(lines[1:4], ("scheme", "role", "params")):
        tag, _, value = line.partition(" ")
        if tag != name:
            raise FormatError(f"expected {name!r} line, got {line!r}")
        fields[name] = value
    params = {}
    for item in fields["params"].split():
        key, _, value = item.partition("=")
        params[key] = int(value)
    return fields["scheme"], fields["role"], params


def _parse_body(lines):
    mats = {}
    extra = {}
    i = 0
    while i < len(lines):
        line = lines[i]
        if line == "end":
            return mats, extra
        tag, _, rest = line.partition(" ")
        if tag == "matrix":
            rows = int(lines[i + 1].split()[0])
            mats[rest] = gf2.matrix_from_text(lines[i + 1 : i + 2 + rows])
            i += 2 + rows
        else:
            extra[tag] = rest
            i += 1
    raise FormatError("missing end line")


def _expect_shape(mats, name, shape):
    if name not in mats:
        raise FormatError(f"missing matrix {name}")
    if mats[name].shape != shape:
        raise FormatError(f"matrix {name} has shape {mats[name].shape}, expected {shape}")
    return mats[name]


def load_key(text, scheme=None, role=None):
    """Parse a key file; optionally insist on a scheme and role."""
    try:
        lines = text.strip().splitlines()
        got_scheme, got_role, params = _parse_header(lines)
        if scheme is not None and got_scheme != scheme:
            raise FormatError(f"expected a {scheme} key, file holds a {got_scheme} key")
        if role is not None and got_role != role:
            raise FormatError(f"expected a {role} key, file holds a {got_role} key")
        if (got_scheme, got_role) not in _PAYLOAD:
            raise FormatError(f"unknown key kind {got_scheme}/{got_role}")
        mats, extra = _parse_body(lines[4:])
        n, k = params["n"], params["k"]
        if got_scheme == "classic" and got_role == "public":
            return ClassicPublicKey(_expect_shape(mats, "G_pub", (k, n)), params["t"])
        if got_scheme == "classic":
            S = _expect_shape(mats, "S", (k, k))
            G = _expect_shape(mats, "G", (k, n))
            P = _expect_shape(mats, "P", (n, n))
            return ClassicPrivateKey(S=S, code=code_from_generator(G), P=P, t=params["t"])
        if got_role == "public":
            return ArbErrPublicKey(_expect_shape(mats, "G1", (k, n)), _expect_shape(mats, "G2", (n, n)))
        G = _expect_shape(mats, "G", (k, n))
        M, T, Q, G0 = (_expect_shape(mats, x, (n, n)) for x in ("M", "T", "Q", "G0"))
        J = tuple(int(x) for x in extra.get("infoset", "").split())
        sk = ArbErrPrivateKey(code=code_from_generator(G, info_set=J), M=M, T=T, Q=Q, G0=G0)
        if not gf2.select_columns(sk.QT, J).is_zero():
            raise FormatError("QT does not vanish on the stored information set")
        return sk
    except FormatError:
        raise
    except (ArbcError, ValueError, KeyError, IndexError) as exc:
        raise FormatError(f"malformed key file: {exc}") from exc


def dump_ciphertext(scheme, n, k, c):
    lines = _header(scheme, "ciphertext", {"n": n, "k": k})
    lines += [f"c {gf2.bits_to_hex(c)}", "end"]
    return "\n".join(lines) + "\n"


def load_ciphertext(text):
    """Return ``(scheme, n, k, c)`` from a ciphertext file."""
    try:
        lines = text.strip().splitlines()
        scheme, role, params = _parse_header(lines)
        if role != "ciphertext":
            raise FormatError(f"expected a ciphertext file, got role {role!r}")
        _, extra = _parse_body(lines[4:])
        n, k = params["n"], params["k"]
        return scheme, n, k, gf2.hex_to_bits(extra["c"], n)
    except FormatError:
        raise
    except (ArbcError, ValueError, KeyError, IndexError) as exc:
        raise FormatError(f"malformed ciphertext file: {exc}") from exc


def save(path, text):
    Path(path).write_text(text)


def read(path):
    return Path(path).read_text()

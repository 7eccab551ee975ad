"""Command-line interface: ``arbc keygen|encrypt|decrypt|attack|experiment|report``.

Exit codes: 0 success, 2 usage error, 3 data error, 4 attack found nothing.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import analysis, attacks, gf2, keyfile
from .classic import (
    ClassicPublicKey,
    classic_decrypt,
    classic_encrypt,
    classic_keygen,
    random_error,
)
from .codes import bch_build, code_from_generator, hamming74
from .errors import ArbcError, FormatError, NotFound
from .scheme import (
    ArbErrPublicKey,
    arb_decrypt,
    arb_encrypt,
    arb_keygen,
    random_plain,
    uniform_error,
)

EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_NOT_FOUND = 4


class UsageError(Exception):
    pass


def _parse_code(tokens):
    """``bch M T`` | ``hamming74`` | ``generator FILE`` -> (code, default t)."""
    if not tokens:
        raise UsageError("missing code spec")
    kind = tokens[0]
    if kind == "bch":
        if len(tokens) != 3:
            raise UsageError("usage: bch M T")
        m, t = int(tokens[1]), int(tokens[2])
        return bch_build(m, t), t
    if kind == "hamming74":
        if len(tokens) != 1:
            raise UsageError("hamming74 takes no arguments")
        return hamming74(), 1
    if kind == "generator":
        if len(tokens) != 2:
            raise UsageError("usage: generator FILE")
        lines = Path(tokens[1]).read_text().strip().splitlines()
        return code_from_generator(gf2.matrix_from_text(lines)), None
    raise UsageError(f"unknown code spec {kind!r}")


def _rng(seed):
    return np.random.default_rng(seed)


def cmd_keygen(args, out):
    code, default_t = _parse_code(args.code)
    rng = _rng(args.seed)
    prefix = args.out or args.scheme
    if args.scheme == "classic":
        t = args.t if args.t is not None else default_t
        if t is None:
            raise UsageError("--t is required for classic keys on a generator file")
        pk, sk = classic_keygen(code, t, rng)
        extra = f"t {t}"
        bits = analysis.classic_key_bits(code.n, code.k)
    else:
        pk, sk = arb_keygen(code, rng)
        extra = f"rank_G2 {gf2.rank(pk.G2)}"
        bits = analysis.new_key_bits(code.n, code.k)
    keyfile.save(f"{prefix}.pub", keyfile.dump_key(pk))
    keyfile.save(f"{prefix}.priv", keyfile.dump_key(sk))
    print(f"n {code.n}", file=out)
    print(f"k {code.k}", file=out)
    print(extra, file=out)
    print(f"public_key_bits {bits}", file=out)
    print(f"wrote {prefix}.pub {prefix}.priv", file=out)
    return 0


def cmd_encrypt(args, out):
    pk = keyfile.load_key(keyfile.read(args.pubkey), role="public")
    u = gf2.hex_to_bits(args.plaintext, pk.k)
    scheme = keyfile.scheme_of(pk)
    if args.error is not None:
        e = gf2.hex_to_bits(args.error, pk.n)
    else:
        rng = _rng(args.random_error)
        e = random_error(pk.n, pk.t, rng) if scheme == "classic" else uniform_error(pk.n, rng)
    c = classic_encrypt(pk, u, e) if scheme == "classic" else arb_encrypt(pk, u, e)
    text = keyfile.dump_ciphertext(scheme, pk.n, pk.k, c)
    if args.out:
        keyfile.save(args.out, text)
    else:
        out.write(text)
    return 0


def cmd_decrypt(args, out):
    sk = keyfile.load_key(keyfile.read(args.privkey), role="private")
    scheme, n, k, c = keyfile.load_ciphertext(keyfile.read(args.ciphertext))
    if scheme != keyfile.scheme_of(sk):
        raise FormatError(
            f"scheme mismatch: {keyfile.scheme_of(sk)} key, {scheme} ciphertext"
        )
    if (n, k) != (sk.code.n, sk.code.k):
        raise FormatError(f"ciphertext params ({n},{k}) do not match the key")
    u = classic_decrypt(sk, c) if scheme == "classic" else arb_decrypt(sk, c)
    print("0x" + gf2.bits_to_hex(u), file=out)
    return 0


def _attack_target(pk, args):
    if isinstance(pk, ClassicPublicKey):
        return pk.G_pub, (args.t if args.t is not None else pk.t)
    if args.t is None:
        raise UsageError("--t is required for ISD against an arberr key")
    return pk.G1, args.t


def cmd_attack(args, out):
    pk = keyfile.load_key(keyfile.read(args.pubkey), role="public")
    rng = _rng(args.seed)
    if args.mode == "isd":
        G, t = _attack_target(pk, args)
        tau, log2_tau = attacks.isd_expected_iterations(G.cols, G.rows, t)
        if args.ciphertext:
            _, n, _, c = keyfile.load_ciphertext(keyfile.read(args.ciphertext))
            try:
                res = attacks.isd_prange(G, c, t, rng, args.max_iters)
            except NotFound as exc:
                print(f"not_found iterations {exc.iterations}", file=out)
                return EXIT_NOT_FOUND
            print(f"recovered 0x{gf2.bits_to_hex(res.recovered)}", file=out)
            print(f"iterations {res.iterations}", file=out)
            print(f"expected_iterations {float(tau):.4f} log2 {log2_tau:.3f}", file=out)
            return 0
        if isinstance(pk, ArbErrPublicKey):
            report = attacks.isd_on_new_scheme_experiment(
                pk, args.trials, rng, t=t, max_iters=args.max_iters
            )
            print(report.to_text(), file=out)
            return 0
        iters, ok = [], 0
        for _ in range(args.trials):
            u = random_plain(pk.k, rng)
            c = classic_encrypt(pk, u, random_error(pk.n, pk.t, rng))
            try:
                res = attacks.isd_prange(G, c, t, rng, args.max_iters)
            except NotFound:
                continue
            iters.append(res.iterations)
            ok += int(np.array_equal(res.recovered, u))
        mean = float(np.mean(iters)) if iters else float("nan")
        print(f"trials {args.trials}", file=out)
        print(f"recovered {ok}", file=out)
        print(f"mean_iterations {mean:.4f}", file=out)
        print(f"expected_iterations {float(tau):.4f} log2 {log2_tau:.3f}", file=out)
        return 0
    # direct
    if not isinstance(pk, ArbErrPublicKey):
        raise UsageError("direct attack targets arberr keys")
    if args.ciphertext:
        _, _, _, c = keyfile.load_ciphertext(keyfile.read(args.ciphertext))
        u = attacks.direct_attack_bruteforce(pk, c)
        print(f"recovered 0x{gf2.bits_to_hex(u)}", file=out)
        print(f"work_bound 2^{min(pk.k, pk.n - pk.k)}", file=out)
        return 0
    agree = 0
    for _ in range(args.trials):
        u = random_plain(pk.k, rng)
        c = arb_encrypt(pk, u, uniform_error(pk.n, rng))
        agree += int(np.array_equal(attacks.direct_attack_bruteforce(pk, c), u))
    print(f"trials {args.trials}", file=out)
    print(f"recovered {agree}", file=out)
    return 0


def cmd_experiment(args, out):
    if args.kind != "spectrum":
        raise UsageError(f"unknown experiment {args.kind!r}")
    code, _ = _parse_code(args.code)
    info_set = "random" if args.info_set == "random" else None
    report = attacks.spectrum_experiment(code, args.trials, args.seed, info_set=info_set)
    if args.out:
        root = Path(args.out)
        (root / "spectra").mkdir(parents=True, exist_ok=True)
        (root / "records.txt").write_text(report.records_text() + "\n")
        (root / "aggregate.txt").write_text(report.aggregate_text() + "\n")
        for i, tr in enumerate(report.trials):
            path = root / "spectra" / f"trial_{i:03d}_n{tr.n}_k{tr.k_eff}.txt"
            path.write_text(tr.spectrum.to_text() + "\n")
    if args.format == "records":
        print(report.records_text(), file=out)
    else:
        print(report.aggregate_text(), file=out)
    return 0


def cmd_report(args, out):
    if args.kind != "keysizes":
        raise UsageError(f"unknown report {args.kind!r}")
    print(analysis.format_table(analysis.reference_table(), args.format), file=out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="arbc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    kg = sub.add_parser("keygen", help="generate a key pair")
    kg.add_argument("scheme", choices=["classic", "arberr"])
    kg.add_argument("code", nargs="+", help="bch M T | hamming74 | generator FILE")
    kg.add_argument("--t", type=int, default=None)
    kg.add_argument("--seed", type=int, default=None)
    kg.add_argument("--out", default=None, help="output prefix for .pub/.priv")
    kg.set_defaults(func=cmd_keygen)

    en = sub.add_parser("encrypt", help="encrypt a hex plaintext")
    en.add_argument("pubkey")
    en.add_argument("plaintext")
    grp = en.add_mutually_exclusive_group()
    grp.add_argument("--error", default=None, help="explicit error vector in hex")
    grp.add_argument("--random-error", type=int, default=None, metavar="SEED")
    en.add_argument("--out", default=None)
    en.set_defaults(func=cmd_encrypt)

    de = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    de.add_argument("privkey")
    de.add_argument("ciphertext")
    de.set_defaults(func=cmd_decrypt)

    at = sub.add_parser("attack", help="run ISD or the direct attack")
    at.add_argument("mode", choices=["isd", "direct"])
    at.add_argument("pubkey")
    at.add_argument("ciphertext", nargs="?")
    at.add_argument("--t", type=int, default=None)
    at.add_argument("--max-iters", type=int, default=10_000)
    at.add_argument("--trials", type=int, default=100)
    at.add_argument("--seed", type=int, default=None)
    at.set_defaults(func=cmd_attack)

    ex = sub.add_parser("experiment", help="run the syndrome-transform spectrum study")
    ex.add_argument("kind", choices=["spectrum"])
    ex.add_argument("--code", nargs="+", default=["bch", "6", "7"])
    ex.add_argument("--trials", type=int, default=100)
    ex.add_argument("--seed", type=int, default=0)
    ex.add_argument("--info-set", choices=["code", "random"], default="code")
    ex.add_argument("--out", default=None)
    ex.add_argument("--format", choices=["text", "records"], default="text")
    ex.set_defaults(func=cmd_experiment)

    rp = sub.add_parser("report", help="print comparison tables")
    rp.add_argument("kind", choices=["keysizes"])
    rp.add_argument("--format", choices=["text", "records"], default="text")
    rp.set_defaults(func=cmd_report)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"arbc: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotFound as exc:
        print(f"arbc: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except (ArbcError, OSError, ValueError) as exc:
        print(f"arbc: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: code construction, bound queries, sweeps,
verification, extremal generation, and a file encoder/decoder.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 parameter error,
4 data corruption.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import extremal as extremal_mod
from . import verify as verify_mod
from .coders import (
    dth_exp_code,
    exp_huffman_distribution,
    first_order_shannon,
    huffman_average,
    minimax_huffman,
    shannon_code,
)
from .errors import CorruptPayload, InvalidParameter, MinimaxCodeError
from .model import Codebook, LengthVector, canonical_assign, load_distribution_text

MAGIC = b"MPR1"

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_PARAM = 3
EXIT_CORRUPT = 4


# ---------------------------------------------------------------- payload

def encode_payload(codewords: list[str], symbols: list[int]) -> bytes:
    """Pack 0-based symbol indices as MAGIC + count(u64 BE) + MSB-first bits."""
    bits = []
    for s in symbols:
        if not (0 <= s < len(codewords)):
            raise InvalidParameter(f"symbol index {s + 1} out of range")
        bits.append(codewords[s])
    stream = "".join(bits)
    out = bytearray(MAGIC)
    out += len(symbols).to_bytes(8, "big")
    for i in range(0, len(stream), 8):
        chunk = stream[i : i + 8].ljust(8, "0")
        out.append(int(chunk, 2))
    return bytes(out)


def decode_payload(codewords: list[str], payload: bytes) -> list[int]:
    """Invert encode_payload, returning 0-based symbol indices."""
    if len(payload) < 12 or payload[:4] != MAGIC:
        raise CorruptPayload("bad magic or truncated header")
    count = int.from_bytes(payload[4:12], "big")
    body = payload[12:]
    stream = "".join(format(b, "08b") for b in body)
    table = {cw: i for i, cw in enumerate(codewords)}
    if len(table) != len(codewords):
        raise CorruptPayload("codebook has duplicate codewords")
    symbols: list[int] = []
    pos = 0
    cur = ""
    if count > 0 and all(cw == "" for cw in codewords):
        # single-symbol alphabet: empty codeword, zero bits per symbol
        return [0] * count
    while len(symbols) < count:
        if pos >= len(stream):
            raise CorruptPayload("bitstream exhausted mid-codeword")
        cur += stream[pos]
        pos += 1
        if cur in table:
            symbols.append(table[cur])
            cur = ""
    if cur:
        raise CorruptPayload("bitstream exhausted mid-codeword")
    if any(b == "1" for b in stream[pos:]):
        raise CorruptPayload("nonzero padding bits after final codeword")
    if len(stream) - pos >= 8:
        raise CorruptPayload("trailing bytes beyond declared symbol count")
    return symbols


# ---------------------------------------------------------------- commands

def _load_distribution(path: str):
    try:
        text = Path(path).read_text()
        return load_distribution_text(text)
    except (OSError, ValueError, KeyError, MinimaxCodeError) as e:
        print(f"error: cannot read distribution from {path}: {e}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def cmd_code(args) -> int:
    p = _load_distribution(args.input)
    try:
        if args.objective == "avg":
            res = huffman_average(p)
        elif args.objective == "minimax":
            res = minimax_huffman(p)
        elif args.objective == "shannon":
            res = shannon_code(p)
        elif args.objective == "shannon1":
            res = first_order_shannon(p)
        elif args.objective == "exp":
            if args.base is None:
                raise InvalidParameter("--base is required for --objective exp")
            res = exp_huffman_distribution(p, args.base)
        elif args.objective == "dexp":
            if args.d is None:
                raise InvalidParameter("--d is required for --objective dexp")
            res = dth_exp_code(p, args.d)
        else:  # pragma: no cover - argparse choices
            raise InvalidParameter(f"unknown objective {args.objective}")
    except MinimaxCodeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAM
    book = canonical_assign(res.lengths, res.objective_name, res.objective_value)
    out = {
        "lengths": p.to_original_order(list(res.lengths)),
        "codewords": p.to_original_order(list(book.codewords)),
        "objective": {"name": res.objective_name, "value": res.objective_value},
        "probabilities": p.to_original_order(list(p.probs)),
    }
    text = json.dumps(out, indent=2)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    try:
        if args.sweep:
            start, stop, step = (float(x) for x in args.sweep.split(":"))
            rows = verify_mod.sweep_bounds(start, stop, step)
            if args.out:
                Path(args.out).write_text("\n".join(rows) + "\n")
            else:
                print("\n".join(rows))
            return EXIT_OK
        if args.p1 is None:
            raise InvalidParameter("provide --p1 or --sweep")
        iv = bounds_mod.minimax_bounds(args.p1)
        out = iv.to_json_dict()
        if args.l1:
            out["l1"] = bounds_mod.l1_bounds(args.p1).to_json_dict()
        print(json.dumps(out, indent=2))
        return EXIT_OK
    except (MinimaxCodeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAM


def cmd_verify(args) -> int:
    try:
        d_list = tuple(float(x) for x in args.d_list.split(",")) if args.d_list else (1.0,)
        report = verify_mod.run_trials(
            args.nmin, args.nmax, args.trials, args.seed, d_list
        )
    except (MinimaxCodeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAM
    print(report.to_json())
    return EXIT_OK if report.ok else EXIT_VERIFY_FAIL


def cmd_extremal(args) -> int:
    try:
        if args.family == "upper":
            dist, spec = extremal_mod.gen_upper_family(args.p1, args.epsilon)
        elif args.family == "lower":
            dist, spec = extremal_mod.gen_lower_family(args.p1)
        elif args.family == "l1-upper":
            dist, spec = extremal_mod.gen_l1_family(args.p1, "upper")
        elif args.family == "l1-lower":
            dist, spec = extremal_mod.gen_l1_family(args.p1, "lower")
        else:  # pragma: no cover - argparse choices
            raise InvalidParameter(f"unknown family {args.family}")
    except MinimaxCodeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAM
    out = {"probabilities": list(dist.probs)}
    out.update(spec.to_json_dict())
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _load_codebook(path: str) -> Codebook:
    try:
        return Codebook.from_json_dict(json.loads(Path(path).read_text()))
    except (OSError, ValueError, KeyError, MinimaxCodeError) as e:
        print(f"error: cannot read codebook from {path}: {e}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def cmd_encode(args) -> int:
    book = _load_codebook(args.code)
    try:
        tokens = Path(args.input).read_text().split()
        symbols = [int(t) - 1 for t in tokens]
    except (OSError, ValueError) as e:
        print(f"error: cannot read symbols from {args.input}: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        payload = encode_payload(list(book.codewords), symbols)
    except InvalidParameter as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    Path(args.output).write_bytes(payload)
    return EXIT_OK


def cmd_decode(args) -> int:
    book = _load_codebook(args.code)
    try:
        payload = Path(args.input).read_bytes()
    except OSError as e:
        print(f"error: cannot read payload from {args.input}: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        symbols = decode_payload(list(book.codewords), payload)
    except CorruptPayload as e:
        print(f"error: corrupt payload: {e}", file=sys.stderr)
        return EXIT_CORRUPT
    Path(args.output).write_text(" ".join(str(s + 1) for s in symbols) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="minimaxcode",
        description="Optimal prefix codes under minimax pointwise redundancy "
        "and related objectives, with tight bounds and verification.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("code", help="construct a codebook for a distribution")
    c.add_argument("--objective", required=True,
                   choices=["avg", "minimax", "shannon", "shannon1", "exp", "dexp"])
    c.add_argument("--base", type=float, help="base a for --objective exp")
    c.add_argument("--d", type=float, help="order d for --objective dexp")
    c.add_argument("--input", required=True, help="distribution file (JSON or one-per-line)")
    c.add_argument("--output", help="codebook JSON output path (default stdout)")
    c.set_defaults(func=cmd_code)

    b = sub.add_parser("bounds", help="query minimax bound intervals")
    b.add_argument("--p1", type=float, help="probability of the most likely symbol")
    b.add_argument("--sweep", help="grid start:stop:step for a CSV sweep")
    b.add_argument("--l1", action="store_true", help="include l(1) bounds")
    b.add_argument("--out", help="CSV output path for --sweep")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="run the randomized property harness")
    v.add_argument("--nmin", type=int, default=2)
    v.add_argument("--nmax", type=int, default=8)
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--d-list", dest="d_list", default="1",
                   help="comma-separated d values for R^d checks")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("extremal", help="generate a bound-witness distribution")
    e.add_argument("--family", required=True,
                   choices=["upper", "lower", "l1-upper", "l1-lower"])
    e.add_argument("--p1", type=float, required=True)
    e.add_argument("--epsilon", type=float)
    e.set_defaults(func=cmd_extremal)

    en = sub.add_parser("encode", help="encode 1-based symbol indices with a codebook")
    en.add_argument("--code", required=True, help="codebook JSON path")
    en.add_argument("--input", required=True)
    en.add_argument("--output", required=True)
    en.set_defaults(func=cmd_encode)

    de = sub.add_parser("decode", help="decode a payload back to symbol indices")
    de.add_argument("--code", required=True, help="codebook JSON path")
    de.add_argument("--input", required=True)
    de.add_argument("--output", required=True)
    de.set_defaults(func=cmd_decode)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as e:  # input loaders exit directly with their code
        return int(e.code)


if __name__ == "__main__":
    sys.exit(main())

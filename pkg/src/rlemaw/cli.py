"""Command line entry point: ``rlemaw {encode,decode,maws,stats,verify,gen,bench}``."""

from __future__ import annotations

import argparse
import gc
import json
import os
import sys
import time
from typing import Sequence

from . import oracle
from .bounds import FAMILIES, FamilySpec, audit_bounds, gen_family_rle
from .errors import InvalidInput, InvalidSpec
from .maw import MawHandle, build, enumerate_all, expand, space_words
from .rle import RleString, decode, encode, format_rle, parse_rle

EXIT_OK, EXIT_INPUT, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3
DEFAULT_ORACLE_LIMIT = 4096


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


def _read_raw(path: str, byte_mode: bool) -> str:
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    if byte_mode:
        return data.decode("latin-1")
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{path} is not valid UTF-8 (use --bytes for binary input)") from exc


def load_input(args, strip_newline: bool = True) -> RleString:
    raw = _read_raw(args.input, args.bytes)
    fmt = args.input_format
    if fmt == "auto":
        fmt = "rle" if args.input.endswith(".rle") else "text"
    if fmt == "rle":
        return parse_rle(raw)
    if strip_newline and not args.keep_newline:
        if raw.endswith("\r\n"):
            raw = raw[:-2]
        elif raw.endswith("\n"):
            raw = raw[:-1]
    return encode(raw)


class Output:
    """Line writer honouring byte mode (latin-1) or UTF-8."""

    def __init__(self, byte_mode: bool):
        self.buf = sys.stdout.buffer
        self.codec = "latin-1" if byte_mode else "utf-8"

    def line(self, text: str = "") -> None:
        try:
            self.buf.write(text.encode(self.codec) + b"\n")
        except UnicodeEncodeError as exc:
            raise InputError("output symbol not representable in byte mode") from exc

    def raw(self, text: str) -> None:
        self.buf.write(text.encode(self.codec))

    def flush(self) -> None:
        self.buf.flush()


def _types(value: str) -> list[int]:
    try:
        out = sorted({int(v) for v in value.replace(",", " ").split()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad type list {value!r}") from None
    if not out or any(t < 1 or t > 5 for t in out):
        raise argparse.ArgumentTypeError("types are 1..5")
    return out


def _positive(value: str) -> int:
    try:
        v = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _alphabet(args):
    return list(args.alphabet) if args.alphabet is not None else None


def cmd_encode(args, out: Output) -> int:
    out.line(format_rle(load_input(args, strip_newline=False)))
    return EXIT_OK


def cmd_decode(args, out: Output) -> int:
    if args.input_format == "text":
        raise UsageError("decode reads RLE input")
    args.input_format = "rle"
    out.raw(decode(load_input(args)))
    return EXIT_OK


def cmd_maws(args, out: Output) -> int:
    rle = load_input(args)
    bundle = build(rle, _alphabet(args))
    for h in enumerate_all(bundle, types=args.types):
        if args.refs and args.format == "text":
            out.line(" ".join(str(v) for v in h.fields()))
            continue
        word = expand(h, rle)
        if args.format == "jsonl":
            rec = {"type": h.type_id}
            if args.refs:
                rec["ref"] = list(h.fields())
            else:
                rec["maw"] = decode(word)
            rec["rle"] = [[s, e] for s, e in word.runs]
            rec["len"] = word.length
            out.line(json.dumps(rec, ensure_ascii=False))
        elif args.format == "rle":
            out.line(format_rle(word))
        else:
            out.line(decode(word))
    return EXIT_OK


def stats_record(rle: RleString, alphabet=None) -> dict:
    report = audit_bounds(rle, alphabet, strict=False)
    return {
        "n": report.n,
        "m": report.m,
        "sigma_prime": report.sigma_prime,
        "counts": {f"m{t}": report.counts[t] for t in range(1, 6)},
        "X": report.x_total,
        "W_size": report.w_size,
        "space_words": report.space_words,
        "bound_slacks": report.slacks,
    }


def cmd_stats(args, out: Output) -> int:
    rec = stats_record(load_input(args), _alphabet(args))
    if args.json:
        out.line(json.dumps(rec))
        return EXIT_OK
    for key in ("n", "m", "sigma_prime"):
        out.line(f"{key}: {rec[key]}")
    out.line("counts: " + " ".join(f"{k}={v}" for k, v in rec["counts"].items()))
    for key in ("X", "W_size", "space_words"):
        out.line(f"{key}: {rec[key]}")
    out.line("bound_slacks: " + " ".join(f"{k}={v:.4f}" for k, v in rec["bound_slacks"].items()))
    return EXIT_OK


def _oracle_limit(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("RLEMAW_ORACLE_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"RLEMAW_ORACLE_LIMIT is not an integer: {env!r}") from None
    return DEFAULT_ORACLE_LIMIT


def cmd_verify(args, out: Output) -> int:
    rle = load_input(args)
    limit = _oracle_limit(args.max_n)
    if rle.length > limit:
        raise InputError(f"n = {rle.length} exceeds the oracle limit {limit}; the brute-force "
                         "check costs O(n^3) and more, raise --max-n if you mean it")
    alphabet = _alphabet(args)
    bundle = build(rle, alphabet)
    got = [(h.type_id, decode(expand(h, rle))) for h in enumerate_all(bundle)]
    if args.inject_fault and got:
        got.pop()
    want = {(r.type_id, r.word) for r in oracle.maws_bruteforce(decode(rle), bundle.alphabet)}
    counts = {t: sum(1 for g in got if g[0] == t) for t in range(1, 6)}
    out.line("counts: " + "/".join(str(counts[t]) for t in range(1, 6)))
    ok = len(got) == len(set(got)) and set(got) == want
    if not ok:
        out.line(f"missing: {len(want - set(got))} extra: {len(set(got) - want)} "
                 f"duplicates: {len(got) - len(set(got))}")
    out.line("MATCH" if ok else "MISMATCH")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_gen(args, out: Output) -> int:
    try:
        spec = FamilySpec(args.kind, args.size)
    except InvalidSpec as exc:
        raise UsageError(str(exc)) from exc
    rle = gen_family_rle(spec, digits=args.digits)
    out.line(format_rle(rle) if args.rle else decode(rle))
    return EXIT_OK


def bench_record(rle: RleString, repeat: int, alphabet=None) -> dict:
    build_ns = enum_ns = None
    count = 0
    sink = lambda h: None  # noqa: E731
    enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeat):
            t0 = time.perf_counter_ns()
            bundle = build(rle, alphabet)
            t1 = time.perf_counter_ns()
            count = enumerate_all(bundle, sink)
            t2 = time.perf_counter_ns()
            build_ns = t1 - t0 if build_ns is None else min(build_ns, t1 - t0)
            enum_ns = t2 - t1 if enum_ns is None else min(enum_ns, t2 - t1)
    finally:
        if enabled:
            gc.enable()
    return {
        "n": rle.length,
        "m": len(rle.runs),
        "maws": count,
        "repeat": repeat,
        "build_ns": build_ns,
        "enum_ns": enum_ns,
        "ns_per_maw": enum_ns / count if count else None,
        "space_words": space_words(bundle)["total"],
    }


def cmd_bench(args, out: Output) -> int:
    rec = bench_record(load_input(args), args.repeat, _alphabet(args))
    if args.json:
        out.line(json.dumps(rec))
        return EXIT_OK
    per = "n/a" if rec["ns_per_maw"] is None else f"{rec['ns_per_maw']:.1f}"
    out.line(f"n={rec['n']} m={rec['m']} maws={rec['maws']} repeat={rec['repeat']}")
    out.line(f"build: {rec['build_ns'] / 1e6:.3f} ms")
    out.line(f"enumerate: {rec['enum_ns'] / 1e6:.3f} ms ({per} ns per MAW)")
    out.line(f"structure words: {rec['space_words']}")
    return EXIT_OK


def _input_options(p: argparse.ArgumentParser, text_flags: bool = True) -> None:
    p.add_argument("input", help="input file, or - for standard input")
    p.add_argument("--input-format", choices=("auto", "text", "rle"), default="auto",
                   help="auto: .rle files are parsed as run tokens, anything else as text")
    p.add_argument("--bytes", action="store_true", help="treat input as raw bytes (latin-1)")
    if text_flags:
        p.add_argument("--keep-newline", action="store_true",
                       help="keep a trailing newline of text input as a symbol")
        p.add_argument("--alphabet", help="explicit alphabet, one symbol per character")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rlemaw", description="Minimal absent words of run-length encoded text.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="text to RLE tokens")
    _input_options(p, text_flags=False)
    p.set_defaults(func=cmd_encode, keep_newline=True)

    p = sub.add_parser("decode", help="RLE tokens to text")
    _input_options(p, text_flags=False)
    p.set_defaults(func=cmd_decode, keep_newline=True)

    p = sub.add_parser("maws", help="list minimal absent words")
    _input_options(p)
    p.add_argument("--types", type=_types, help="comma separated subset of 1..5")
    p.add_argument("--format", choices=("text", "jsonl", "rle"), default="text")
    p.add_argument("--refs", action="store_true", help="emit six-field handles instead of words")
    p.set_defaults(func=cmd_maws)

    p = sub.add_parser("stats", help="counts, structure size and bound slacks")
    _input_options(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="cross-check against the brute-force oracle")
    _input_options(p)
    p.add_argument("--max-n", type=int, help="size cap (default $RLEMAW_ORACLE_LIMIT or 4096)")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a lower-bound family string")
    p.add_argument("kind", choices=FAMILIES)
    p.add_argument("size", type=int)
    p.add_argument("--rle", action="store_true", help="emit RLE tokens")
    p.add_argument("--digits", action="store_true", help="m2-perm: use 1..9 instead of letters")
    p.set_defaults(func=cmd_gen, bytes=False)

    p = sub.add_parser("bench", help="time build and enumeration")
    _input_options(p)
    p.add_argument("--repeat", type=_positive, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.bytes)
    try:
        code = args.func(args, out)
        out.flush()
        return code
    except UsageError as exc:
        print(f"rlemaw: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, InvalidInput) as exc:
        print(f"rlemaw: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        sys.stderr.close()
        return EXIT_OK


def run() -> None:
    sys.exit(main())

"""Command-line front end.

Exit status is 0 on success, 1 when a library call rejects its input and 2 on
malformed command lines.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from typing import Iterator

import numpy as np

from . import channel as chan
from .bch import bm_decode, erasure_decode_bch, make_bch, two_error_decode
from .cyclic import CyclicCode
from .errors import CodingError
from .gf import Field, conjugacy_class, minimal_polynomial, parse_field_spec
from .linear import (
    LinearCode,
    batch_decoder,
    bhattacharyya,
    build_syndrome_table,
    hamming74,
    ml_union_bound,
    repetition_code,
    syndrome_decode,
)
from .matf import ERASED, MatF, format_vector, parse_vector
from .poly import Poly
from .rs import RsCode, erasure_decode_mds


class UsageError(Exception):
    """A flag value that cannot be interpreted; reported with exit status 2."""


def fmt(x: float) -> str:
    return f"{x:.12g}"


def csv_line(values) -> str:
    return ",".join(fmt(v) if isinstance(v, float) else str(v) for v in values)


# ---------------------------------------------------------- argument parsing
def parse_range(text: str, flag: str) -> list[int]:
    """``5`` or ``2-7`` or ``1,3,5``."""
    try:
        if "-" in text:
            lo, hi = (int(t) for t in text.split("-"))
            return list(range(lo, hi + 1))
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag}: cannot read {text!r} as an integer range") from None


def parse_grid(text: str, flag: str) -> list[float]:
    """``0.01,0.05`` or ``start:stop:step`` (inclusive stop)."""
    try:
        if ":" in text:
            lo, hi, step = (float(t) for t in text.split(":"))
            count = int(round((hi - lo) / step)) + 1
            return [round(lo + i * step, 12) for i in range(count)]
        return [float(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag}: cannot read {text!r} as a number grid") from None


def channel_param(text: str) -> float:
    return float(text.split(":")[-1])


def parse_code(text: str, field: Field | None = None) -> tuple[str, LinearCode]:
    """``rep:N``, ``hamming``, ``bch:M:RSK`` or ``gen:<matrix>``."""
    from .gf import make_prime_field

    f = field or make_prime_field(2)
    kind, _, rest = text.partition(":")
    if kind == "rep":
        return f"rep{rest}", repetition_code(f, int(rest))
    if kind == "hamming":
        return "hamming74", hamming74(f)
    if kind == "bch":
        m, rs_k = (int(t) for t in rest.split(":"))
        code = make_bch(m, rs_k)
        return f"bch{code.n}_{code.k_tilde}", code.as_linear_code()
    if kind == "gen":
        return "gen", LinearCode(MatF.parse(f, rest))
    raise UsageError(f"--code: unknown code {text!r}; use rep:N, hamming, bch:M:RSK or gen:ROWS")


# ----------------------------------------------------------------- commands
def cmd_field(args, out):
    f = parse_field_spec(args.field)
    if args.action == "table":
        vals = range(f.q)
        print(f"field {f.spec} q={f.q} alpha={f.alpha_value} ({f.format(f.alpha_value)})", file=out)
        for name, table in (("+", f.add_table()), ("*", f.mul_table())):
            print(f"\n{name} " + " ".join(str(v) for v in vals), file=out)
            for a in vals:
                print(f"{a} " + " ".join(str(int(x)) for x in table[a]), file=out)
        print("\npower,encoding,polynomial", file=out)
        print("-inf,0,0", file=out)
        for i, v in f.power_table():
            print(f"{i},{v},{f.format(v)}", file=out)
    else:
        seen = set()
        print("representative,class,minimal_polynomial", file=out)
        for a in range(f.q):
            if a in seen:
                continue
            cls = conjugacy_class(f(a))
            seen.update(e.value for e in cls)
            members = " ".join(str(e.value) for e in cls)
            print(f"{a},{members},{minimal_polynomial(f(a)).to_text()}", file=out)


def cmd_code(args, out):
    f = parse_field_spec(args.field)
    code = LinearCode(MatF.parse(f, args.gen))
    if args.action == "info":
        print(f"n: {code.n}", file=out)
        print(f"k: {code.k}", file=out)
        print(f"rate: {fmt(code.rate)}", file=out)
        print(f"d: {code.min_distance() if code.k else '-'}", file=out)
        print(f"weight_enumerator: {','.join(str(a) for a in code.weight_enumerator().counts)}", file=out)
        print(f"rre_G: {code.rre_G.to_text()}", file=out)
        print(f"H: {code.H.to_text() or '-'}", file=out)
    elif args.action == "encode":
        u = _need(args, "u")
        print(format_vector(f, code.encode(parse_vector(f, u))), file=out)
    else:
        y = parse_vector(f, _need(args, "y"))
        rep = syndrome_decode(build_syndrome_table(code), code, y)
        print(f"codeword: {format_vector(f, rep.codeword)}", file=out)
        print(f"leader: {format_vector(f, rep.error)}", file=out)
        print(f"info: {format_vector(f, rep.info)}", file=out)


def cmd_cyclic(args, out):
    f = parse_field_spec(args.field)
    code = CyclicCode(f, args.n, Poly.parse(f, args.g))
    if args.action == "new":
        print(f"n: {code.n}", file=out)
        print(f"k: {code.k}", file=out)
        print(f"g: {code.g.to_text()}", file=out)
        print(f"h: {code.h.to_text()}", file=out)
        print(f"G: {code.generator_matrix().to_text()}", file=out)
        print(f"H: {code.check_matrix().to_text() or '-'}", file=out)
    elif args.action == "encode":
        u = Poly(f, parse_vector(f, _need(args, "u")))
        enc = {"mult": code.encode_mult, "right": code.encode_sys_right, "left": code.encode_sys_left}
        print(format_vector(f, code.vector(enc[args.mode](u))), file=out)
    else:
        v = Poly(f, parse_vector(f, _need(args, "y")))
        print(f"syndrome: {code.syndrome_poly(v).to_text()}", file=out)
        print(f"codeword: {'yes' if code.is_codeword(v) else 'no'}", file=out)


def cmd_rs(args, out):
    f = parse_field_spec(args.field)
    removed = parse_vector(f, args.removed).tolist() if args.removed else ()
    code = RsCode(f, args.k, args.variant, removed)
    if args.action == "info":
        print(f"n: {code.n}", file=out)
        print(f"k: {code.k}", file=out)
        print(f"d: {code.d}", file=out)
        print(f"points: {format_vector(f, code.points)}", file=out)
        if code.variant == "primitive":
            print(f"generator_poly: {code.generator_poly().to_text()}", file=out)
            print(f"H: {code.check_matrix().to_text() or '-'}", file=out)
    elif args.action == "encode":
        print(format_vector(f, code.encode_eval(parse_vector(f, _need(args, "u")))), file=out)
    elif args.action == "syndrome":
        print(format_vector(f, code.syndrome(parse_vector(f, _need(args, "y")))), file=out)
    else:
        y = parse_vector(f, _need(args, "y"), allow_erasures=True)
        u = erasure_decode_mds(code, y)
        print(f"info: {format_vector(f, u)}", file=out)
        print(f"codeword: {format_vector(f, code.encode_eval(u))}", file=out)


def cmd_bch(args, out):
    poly = [int(c) for c in args.poly] if args.poly else None
    code = make_bch(args.m, args.rs_k, poly)
    if args.action == "make":
        print(f"n: {code.n}", file=out)
        print(f"k: {code.k_tilde}", file=out)
        print(f"g: {code.g_tilde.to_text()}", file=out)
        print(f"design_d: {code.design_d}", file=out)
        print(f"t: {code.t}", file=out)
        return 0
    y = parse_vector(code.F2, _need(args, "y"), allow_erasures=True)
    if np.any(y == ERASED):
        u = erasure_decode_bch(code, None, y)
        print("status: ok", file=out)
        print(f"info: {format_vector(code.F2, u)}", file=out)
        print(f"codeword: {format_vector(code.F2, code.encode(u))}", file=out)
        return 0
    decode = two_error_decode if args.method == "two" else bm_decode
    rep = decode(code, y)
    print(f"status: {'ok' if rep.success else 'failed'}", file=out)
    if not rep.success:
        print(f"reason: {rep.reason}", file=out)
        return 1
    print(f"positions: {','.join(str(p) for p in rep.positions) or '-'}", file=out)
    print(f"codeword: {format_vector(code.F2, rep.codeword)}", file=out)
    return 0


def cmd_simulate(args, out):
    _, code = parse_code(args.code, parse_field_spec(args.field))
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    table = build_syndrome_table(code)
    dec = batch_decoder(table)
    print("delta,trials,seed,cw_errors,info_errors,cw_rate,info_rate", file=out)
    for spec in args.channel or ["bsc:0.11"]:
        ch = chan.parse_channel(spec)
        if ch.n_in != code.q or ch.n_out != code.q:
            raise UsageError(f"--channel {spec}: alphabet does not match the code's field")
        r = chan.simulate(code.encode, ch, dec, args.trials, args.seed, k=code.k, q=code.q, workers=args.workers)
        print(
            csv_line([channel_param(spec), r.trials, r.seed, r.cw_errors, r.info_errors,
                      r.codeword_error_rate, r.infoword_error_rate]),
            file=out,
        )


def cmd_exact(args, out):
    if args.words:
        words = [w.strip() for w in args.words.split(",")]
    else:
        _, code = parse_code(args.code or "rep:5", parse_field_spec(args.field))
        words = code.codewords().tolist()
    print("delta,pe", file=out)
    for spec in args.channel or ["bsc:0.11"]:
        pe = chan.exact_block_error(words, chan.parse_channel(spec))
        print(csv_line([channel_param(spec), pe]), file=out)


def cmd_search(args, out):
    ns = parse_range(args.n, "--n") if args.n else (list(range(1, 8)) if args.full else list(range(1, 6)))
    sizes = parse_range(args.size, "--size") if args.size else (list(range(1, 5)) if args.full else list(range(1, 4)))
    print("n,size,rate,pe,pcb,code", file=out)
    for spec in args.channel or ["bsc:0.11"]:
        ch = chan.parse_channel(spec)
        for n in ns:
            for m in sizes:
                if m > ch.n_in**n:
                    continue
                r = chan.search_best_code(n, m, ch, cost_cap=args.cost_cap)
                words = " ".join("".join(str(s) for s in w) for w in r.code)
                pcb = chan.pcb(r.pe, n) if 840 % n == 0 else ""
                print(csv_line([n, m, r.rate, r.pe, pcb, words]), file=out)


def cmd_bound(args, out):
    deltas = parse_grid(args.deltas, "--deltas")
    names = args.codes.split(",") if args.codes else [f"rep:{n}" for n in range(1, 8)] + ["hamming"]
    codes = [parse_code(c) for c in names]
    print("delta,code,rate,pe,pcb,bound,method", file=out)
    for d in deltas:
        ch = chan.bsc(d)
        beta = bhattacharyya(ch)
        for label, code in codes:
            try:
                pe = chan.exact_block_error(code.codewords().tolist(), ch)
                method = "exact"
            except CodingError:
                dec = batch_decoder(build_syndrome_table(code))
                r = chan.simulate(code.encode, ch, dec, args.trials, args.seed, k=code.k, workers=args.workers)
                pe, method = r.codeword_error_rate, "montecarlo"
            pcb = chan.pcb(pe, code.n) if 840 % code.n == 0 else ""
            bound = ml_union_bound(code.weight_enumerator(), beta)
            print(csv_line([d, label, code.rate, pe, pcb, float(bound), method]), file=out)


def _need(args, name: str) -> str:
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name} is required for this action")
    return value


# ------------------------------------------------------------------- parser
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="RNG seed (default 0)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS, help="parallel simulation workers")

    p = argparse.ArgumentParser(prog="fieldcodes", description="Finite-field channel coding toolkit.")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--workers", type=int, default=1)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("field", parents=[common], help="field tables and conjugacy classes")
    s.add_argument("action", choices=["table", "classes"])
    s.add_argument("field", help="field spec such as 2^4:11001")
    s.set_defaults(run=cmd_field)

    s = sub.add_parser("code", parents=[common], help="linear block codes")
    s.add_argument("action", choices=["info", "encode", "decode"])
    s.add_argument("--gen", required=True, help="generator rows, e.g. 1000011;0100101;...")
    s.add_argument("--field", default="2")
    s.add_argument("--u")
    s.add_argument("--y")
    s.set_defaults(run=cmd_code)

    s = sub.add_parser("cyclic", parents=[common], help="cyclic codes")
    s.add_argument("action", choices=["new", "encode", "syndrome"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--g", required=True, help="generator coefficients, ascending")
    s.add_argument("--field", default="2")
    s.add_argument("--mode", choices=["mult", "right", "left"], default="mult")
    s.add_argument("--u")
    s.add_argument("--y")
    s.set_defaults(run=cmd_cyclic)

    s = sub.add_parser("rs", parents=[common], help="Reed-Solomon codes")
    s.add_argument("action", choices=["info", "encode", "syndrome", "decode"])
    s.add_argument("--field", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--variant", choices=["primitive", "full", "punctured"], default="primitive")
    s.add_argument("--removed", help="points dropped by the punctured variant")
    s.add_argument("--u")
    s.add_argument("--y", help="received word; 'e' marks an erasure")
    s.set_defaults(run=cmd_rs)

    s = sub.add_parser("bch", parents=[common], help="binary BCH codes")
    s.add_argument("action", choices=["make", "decode"])
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--rs-k", dest="rs_k", type=int, required=True)
    s.add_argument("--poly", help="primitive polynomial digits, ascending")
    s.add_argument("--method", choices=["bm", "two"], default="bm")
    s.add_argument("--y", help="received bits; 'e' marks an erasure")
    s.set_defaults(run=cmd_bch)

    s = sub.add_parser("simulate", parents=[common], help="Monte Carlo error rates")
    s.add_argument("--code", default="rep:5")
    s.add_argument("--field", default="2")
    s.add_argument("--channel", action="append")
    s.add_argument("--trials", type=int, default=100000)
    s.set_defaults(run=cmd_simulate)

    s = sub.add_parser("exact", parents=[common], help="exact MAP block error probability")
    s.add_argument("--code")
    s.add_argument("--words", help="explicit codewords, e.g. 00000,11111")
    s.add_argument("--field", default="2")
    s.add_argument("--channel", action="append")
    s.set_defaults(run=cmd_exact)

    s = sub.add_parser("search", parents=[common], help="exhaustive best-code search")
    s.add_argument("--n", help="block lengths, e.g. 2-5")
    s.add_argument("--size", help="code sizes, e.g. 1-3")
    s.add_argument("--channel", action="append")
    s.add_argument("--full", action="store_true", help="n up to 7 and |C| up to 4 (slow)")
    s.add_argument("--cost-cap", dest="cost_cap", type=float, default=chan.SEARCH_COST_CAP)
    s.set_defaults(run=cmd_search)

    s = sub.add_parser("bound", parents=[common], help="rate-reliability table with union bound")
    s.add_argument("--deltas", default="0:0.2:0.01")
    s.add_argument("--codes", help="comma separated code specs (default rep:1..7,hamming)")
    s.add_argument("--trials", type=int, default=100000)
    s.set_defaults(run=cmd_bound)
    return p


@contextlib.contextmanager
def _output(path: str | None) -> Iterator[io.TextIOBase]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="\n") as fh:
            yield fh


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _output(args.out) as out:
            status = args.run(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except (CodingError, ValueError, ZeroDivisionError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return int(status or 0)


if __name__ == "__main__":
    sys.exit(main())

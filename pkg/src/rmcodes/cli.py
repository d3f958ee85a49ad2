"""Command-line front end.

Exit codes: 0 success, 1 verification or construction failure, 2 usage or
parse error, 3 uncorrectable received word.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds, fileformat, oracle
from .errors import ConstructionFailure, InfeasibleParameters, InvalidArgument, UncorrectableError
from .perm import as_factoradic, as_perm, inverse, phi, phi_inverse, rank, unrank
from .registry import CONSTRUCTIONS, make_handle, handle_for_codebook

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNCORRECTABLE = 0, 1, 2, 3


def _parse_perm(text: str):
    try:
        return as_perm(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise InvalidArgument(f"cannot parse permutation {text!r}") from None


def _code_params(args) -> dict:
    params = {"k": args.k, "r": args.r, "d": args.d, "p": args.p, "m": args.m, "t": args.t,
              "binary": args.binary}
    if args.construction == "c3":
        params["bch_n"] = args.n
    elif args.construction == "c7":
        params["inner_n"] = args.n
    else:
        params["n"] = args.n
    return params


def _add_code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int, help="code length (c5, c6), BCH length (c3), inner length (c7)")
    p.add_argument("--d", type=int)
    p.add_argument("--r", type=int, help="redundancy symbols for the rho code")
    p.add_argument("--p", type=int, help="field characteristic (c3)")
    p.add_argument("--m", type=int, help="prime modulus (c1, rho) or extension degree (c3)")
    p.add_argument("--t", type=int, help="designed error count (c3)")
    p.add_argument("--binary", help="binary code for c4, e.g. hamming4 or repetition3")


def cmd_build(args) -> int:
    handle = make_handle(args.construction, _code_params(args))
    if handle.enumerable:
        text = fileformat.dump_codebook(handle.build())
    else:
        text = fileformat.dump_spec(handle.core(), handle.params)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return EXIT_OK


def cmd_encode(args) -> int:
    handle = make_handle(args.construction, _code_params(args))
    info = _parse_perm(args.info)
    if len(info) != handle.k:
        raise InvalidArgument(f"information permutation must have length {handle.k}")
    if handle.encode is not None:
        word = handle.encode(info)
    else:
        cb = handle.build()
        word = next(c for c in cb if cb.information(c) == info)
    print(fileformat.format_perm(word))
    return EXIT_OK


def cmd_decode(args) -> int:
    handle = make_handle(args.construction, _code_params(args))
    received = _parse_perm(args.received)
    if len(received) != handle.n:
        raise InvalidArgument(f"received word must have length {handle.n}")
    decode = handle.decode
    if decode is None:
        decode = oracle.nearest_decoder(handle.build())
    print(fileformat.format_perm(decode(received)))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        text = Path(args.codebook).read_text()
    except OSError as exc:
        raise InvalidArgument(str(exc)) from None
    cb = fileformat.load_codebook(text)
    checks = tuple(c.strip() for c in args.checks.split(","))
    unknown = set(checks) - {"distance", "systematic", "decode"}
    if unknown:
        raise InvalidArgument(f"unknown checks: {', '.join(sorted(unknown))}")
    decoder = None
    if "decode" in checks:
        decoder = handle_for_codebook(cb).decode or oracle.nearest_decoder(cb)
    report = oracle.verify(cb, checks, decoder=decoder, workers=args.workers)

    print(f"codebook {args.codebook}: {cb.construction_id} [{cb.n},{cb.k},{cb.d_claimed}] "
          f"{cb.metric}, {len(cb)} codewords")
    lines = [f"construction={cb.construction_id}", f"size={len(cb)}"]
    if report.distance_ok is not None:
        lines.append(f"distance={'pass' if report.distance_ok else 'fail'} "
                     f"measured={report.measured_min_distance} claimed={cb.d_claimed}")
    if report.systematic_ok is not None:
        lines.append(f"systematic={'pass' if report.systematic_ok else 'fail'}")
    if report.decode_ok is not None:
        lines.append(f"decode={'pass' if report.decode_ok else 'fail'} "
                     f"trials={report.decode_trials} failures={len(report.decode_failures)}")
        for c, g, got in report.decode_failures[:5]:
            print(f"  decode failure: codeword [{fileformat.format_perm(c)}] "
                  f"received [{fileformat.format_perm(g)}] -> {got}")
    lines.append(f"result={'pass' if report.passed else 'fail'}")
    lines.append(f"elapsed={report.elapsed:.3f}")
    print("\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAIL


def _row(pairs) -> str:
    return "\t".join(f"{key}={value}" for key, value in pairs)


def cmd_bounds(args) -> int:
    n = args.n
    if args.ball:
        if args.r is None:
            raise InvalidArgument("--ball needs --r")
        print(_row([("n", n), ("r", args.r), ("exact", bounds.ball_size_exact(n, args.r)),
                    ("upper", bounds.ball_size_upper(n, args.r))]))
        return EXIT_OK
    if args.d is None:
        raise InvalidArgument("--d is required unless --ball is given")
    if args.maxk:
        print(_row([("n", n), ("d", args.d), ("max_k", bounds.max_k_theorem2(n, args.d))]))
        return EXIT_OK
    if args.k is not None:
        report = bounds.theorem2_check(n, args.k, args.d)
        print(_row([*report.as_row().items(), ("max_k", bounds.max_k_theorem2(n, args.d))]))
        return EXIT_OK
    r = min((args.d - 1) // 2, bounds.max_distance(n))
    print(_row([("n", n), ("d", args.d), ("r", r), ("ball_exact", bounds.ball_size_exact(n, r)),
                ("ball_upper", bounds.ball_size_upper(n, r)),
                ("packing_bound", bounds.packing_bound(n, args.d)),
                ("max_k", bounds.max_k_theorem2(n, args.d) if n > 2 else 0)]))
    return EXIT_OK


def cmd_convert(args) -> int:
    if args.perm is not None:
        f = _parse_perm(args.perm)
    elif args.factoradic is not None:
        f = phi_inverse(int(x) for x in args.factoradic.replace(",", " ").split())
    elif args.rank is not None:
        if args.n is None:
            raise InvalidArgument("--rank needs --n")
        f = unrank(args.rank, args.n)
    else:
        raise InvalidArgument("give one of --perm, --factoradic, --rank")
    print(f"perm={fileformat.format_perm(f)}")
    print(f"inverse={fileformat.format_perm(inverse(f))}")
    print(f"factoradic={fileformat.format_perm(as_factoradic(phi(f)))}")
    print(f"rank={rank(f)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rmcodes", description="Systematic rank-modulation codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a codebook (or spec) file")
    _add_code_args(p)
    p.add_argument("--output", "-o", help="output path; '-' or omitted for stdout")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("encode", help="encode one information permutation")
    _add_code_args(p)
    p.add_argument("--info", required=True, help='space-separated permutation, e.g. "4 1 3 2"')
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode one received permutation")
    _add_code_args(p)
    p.add_argument("--received", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="run brute-force checks on a codebook file")
    p.add_argument("codebook")
    p.add_argument("--checks", default="distance,systematic,decode")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="ball sizes and existence bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--ball", action="store_true", help="print exact and upper ball size for --r")
    p.add_argument("--maxk", action="store_true", help="print the largest certified k")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("convert", help="permutation / factoradic / rank conversions")
    p.add_argument("--perm")
    p.add_argument("--factoradic")
    p.add_argument("--rank", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UncorrectableError as exc:
        print(f"uncorrectable: {exc}", file=sys.stderr)
        return EXIT_UNCORRECTABLE
    except (ConstructionFailure, InfeasibleParameters) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``pow2free {build,verify,spectrum,search}``.

Exit codes: 0 success, 1 a claim failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import atlas
from .cycles import LMAX_CAP, count_cycles_by_length, has_cycle_of_length, limit_threads
from .formats import ParseError, encode_edgelist, encode_graph6, read_graph_text, to_dot
from .search import MAX_ORDER, find_min_pow2_free

EXIT_OK, EXIT_CLAIM, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def cmd_build(args: argparse.Namespace) -> int:
    ng = atlas.get(args.name)
    if args.emit_plan:
        if ng.plan is None:
            raise UsageError(f"{args.name} is not built from an inflation plan")
        sys.stdout.write(atlas.plan_text(args.name))
        return EXIT_OK
    if args.format == "g6":
        sys.stdout.write(encode_graph6(ng.graph) + "\n")
    elif args.format == "edgelist":
        sys.stdout.write(encode_edgelist(ng.graph))
    else:
        sys.stdout.write(to_dot(ng.graph, ng.labels, name=args.name.replace("-", "_")))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    ng = atlas.get(args.name)
    failed = 0
    for claim in ng.claims:
        if claim.slow and args.quick:
            print(f"SKIP  {claim.name}")
            continue
        res = claim.run()
        failed += not res.passed
        detail = f"  [{res.detail}]" if res.detail else ""
        print(f"{'PASS' if res.passed else 'FAIL'}  {res.name}{detail}  {res.seconds:.3f}s", flush=True)
    print(f"{ng.name}: {len(ng.claims)} claims, {failed} failed")
    return EXIT_CLAIM if failed else EXIT_OK


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError as exc:
        raise UsageError(f"{path}: non-ASCII byte at offset {exc.start}") from None


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = read_graph_text(_read_input(args.input))
    if args.existence_only:
        for L in args.existence_only:
            if not 3 <= L <= LMAX_CAP:
                raise UsageError(f"length {L} outside 3..{LMAX_CAP}")
        for L in sorted(set(args.existence_only)):
            print(f"{L} {'yes' if has_cycle_of_length(g, L) else 'no'}")
        return EXIT_OK
    if not 3 <= args.max <= LMAX_CAP:
        raise UsageError(f"--max must be in 3..{LMAX_CAP}, got {args.max}")
    counts = count_cycles_by_length(g, args.max)
    for L, c in counts.as_dict().items():
        print(f"{L} {c}")
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    if args.k < 2:
        raise UsageError(f"--k must be at least 2, got {args.k}")
    if args.nmax % 2 or not 4 <= args.nmax <= MAX_ORDER:
        raise UsageError(f"--nmax must be even and in 4..{MAX_ORDER}, got {args.nmax}")
    report = find_min_pow2_free(args.k, args.nmax)
    sys.stdout.write(report.to_text())
    return EXIT_OK


def _power_of_two(text: str) -> int:
    if text.startswith("2^"):
        return 2 ** int(text[2:])
    value = int(text)
    if value < 1 or value & (value - 1):
        raise argparse.ArgumentTypeError(f"{text} is not a power of two")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pow2free", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=None, help="cap on worker threads (default: all)")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="print a named graph")
    b.add_argument("name", choices=sorted(atlas.REGISTRY))
    b.add_argument("--format", choices=["g6", "edgelist", "dot"], default="g6")
    b.add_argument("--emit-plan", action="store_true", help="print the inflation plan instead")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run the claims bundled with a named graph")
    v.add_argument("name", choices=sorted(atlas.REGISTRY))
    v.add_argument("--quick", action="store_true", help="skip claims marked slow")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("spectrum", help="cycle counts of a graph6 or edge-list graph")
    s.add_argument("input", help="file path, or - for stdin")
    s.add_argument("--max", type=int, default=8, help="longest cycle length to count")
    s.add_argument("--existence-only", type=_power_of_two, nargs="+", metavar="2^m",
                   help="only report whether cycles of these lengths exist")
    s.set_defaults(func=cmd_spectrum)

    q = sub.add_parser("search", help="smallest cubic graphs with no 2^m-cycle for m <= k")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--nmax", type=int, required=True)
    q.set_defaults(func=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be positive")
    t0 = time.perf_counter()
    try:
        with limit_threads(args.threads):
            code = args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"pow2free: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"# {args.command} finished in {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

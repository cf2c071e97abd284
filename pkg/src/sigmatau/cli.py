"""Command line front end: ``sigma-tau <gen|verify|graph|stats|bench>``.

Exit codes: 0 success, 1 a verification failed, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Iterable, Iterator

from . import dot
from .cycles import y_cover_family, y_cycle_family
from .generators import CycleGenerator, PathGenerator, generic_iterator, move_between
from .perms import MAX_N, VisitedSet, format_perm, identity
from .rotation import edge_surplus, face_count, wheeel
from .rules import RuleKind, next_perm, rule_edge_set
from .verify import CHECKS, applicable, run_check
from .wilf import wilf, wilf_induced, wilf_reduced

GRAPH_TARGETS = ("digraph", "wilf", "wilf-induced-cycle", "wilf-induced-cover", "reduced", "wheeel")


class UsageError(Exception):
    pass


def parse_n_range(text: str) -> list[int]:
    """``"5"``, ``"4-7"`` or ``"4,6,8"`` (ranges allowed inside the list)."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if "-" in part:
                lo, hi = (int(x) for x in part.split("-", 1))
                if lo > hi:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"cannot read n from {text!r}") from None
    for n in out:
        if not 1 <= n <= MAX_N:
            raise UsageError(f"n={n} is outside 1..{MAX_N}")
    return out


def _single_n(args) -> int:
    ns = parse_n_range(args.n)
    if len(ns) != 1:
        raise UsageError("this command takes a single n")
    return ns[0]


# --- gen --------------------------------------------------------------------------


def walk_cycles(n: int, kind: RuleKind) -> Iterator[Iterator[tuple]]:
    """Cycles of a rule's cover, each as a lazy vertex stream.

    The first cycle starts at ``1 2 ... n``, later ones at the least unvisited
    permutation.  Only a bitset over the ``n!`` ranks is kept.
    """
    from itertools import permutations

    seen = VisitedSet(n)
    scan = permutations(range(1, n + 1))
    start = identity(n)
    while start is not None:
        def one(p=start):
            while seen.add(p):
                yield p
                p = next_perm(p, kind)

        yield one()
        start = next((p for p in scan if p not in seen), None)


def _emit(out, seq: Iterable[tuple], fmt: str, cyclic: bool) -> int:
    """Write one sequence; returns the number of permutations."""
    count = 0
    if fmt == "moves":
        first = prev = None
        letters: list[str] = []
        for p in seq:
            if prev is None:
                first = p
            else:
                letters.append(move_between(prev, p))
                if len(letters) >= 4096:
                    out.write("".join(letters))
                    letters.clear()
            prev = p
            count += 1
        if cyclic and count > 1:
            letters.append(move_between(prev, first))
        out.write("".join(letters) + "\n")
        return count
    compact = fmt == "compact"
    buf = []
    for p in seq:
        buf.append(format_perm(p, compact))
        count += 1
        if len(buf) >= 4096:
            out.write("\n".join(buf) + "\n")
            buf.clear()
    if buf:
        out.write("\n".join(buf) + "\n")
    return count


def cmd_gen(args) -> int:
    out, err = sys.stdout, sys.stderr
    n = _single_n(args)
    order, engine, fmt = args.order, args.engine, args.format
    if n < 3:
        raise UsageError("gen needs n >= 3")
    if fmt == "compact" and n > 9:
        raise UsageError("compact format needs n <= 9")
    if order == "path":
        seq = PathGenerator(n) if engine == "fast" else generic_iterator(n, RuleKind.PATH)
        _emit(out, seq, fmt, cyclic=False)
        return 0
    if order == "cycle" and engine == "fast":
        if n % 2 == 0 or n < 5:
            raise UsageError("the fast cycle engine needs odd n >= 5")
        _emit(out, CycleGenerator(n), fmt, cyclic=True)
        return 0
    if engine == "fast":
        raise UsageError("order=cover has only the generic engine")
    kind = RuleKind(order)
    cycles = walk_cycles(n, kind)
    sizes = []
    for k, cyc in enumerate(cycles):
        if k:
            out.write("\n")
        sizes.append(_emit(out, cyc, fmt, cyclic=True))
    if kind is RuleKind.CYCLE and len(sizes) > 1:
        print(f"# n={n}: the cycle rule gives a cover of size {len(sizes)}, not a Hamilton cycle", file=err)
    elif kind is RuleKind.COVER:
        print(f"# n={n}: cover of size {len(sizes)}", file=err)
    return 0


# --- verify -----------------------------------------------------------------------


def cmd_verify(args) -> int:
    out, err = sys.stdout, sys.stderr
    names = list(args.check_names or [])
    if args.checks:
        names.extend(x.strip() for x in args.checks.split(",") if x.strip())
    if not names or "all" in names:
        names = list(CHECKS)
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks: {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    ns = parse_n_range(args.n)
    ok = True
    ran = 0
    for n in ns:
        for check in names:
            if not applicable(check, n):
                print(f"# skip {check} n={n}: outside its range", file=err)
                continue
            report = run_check(check, n, seed=args.seed, trials=args.trials)
            print(report.line(), file=out, flush=True)
            ok &= report.ok
            ran += 1
    if not ran:
        raise UsageError("no requested check applies to the requested n")
    return 0 if ok else 1


# --- graph ------------------------------------------------------------------------


def cmd_graph(args) -> int:
    out, err = sys.stdout, sys.stderr
    target = args.target
    if target == "wheeel":
        if args.m is None or args.m < 3 or args.m > 64:
            raise UsageError("wheeel needs --m between 3 and 64")
        out.write(dot.rotation_dot(wheeel(args.m), f"wheeel{args.m}"))
        return 0
    n = _single_n(args)
    if target == "digraph":
        if not 2 <= n <= 6:
            raise UsageError("digraph export is limited to n <= 6")
        cover = None
        if args.order in ("cycle", "cover") and n >= 3:
            cover = rule_edge_set(n, args.order)
        out.write(dot.digraph_dot(n, cover))
        return 0
    if not 4 <= n <= 6:
        raise UsageError(f"{target} export is limited to 4 <= n <= 6")
    if target == "wilf":
        out.write(dot.rotation_dot(wilf(n), f"W{n}"))
    elif target == "wilf-induced-cycle":
        out.write(dot.rotation_dot(wilf_induced(n, "cycle"), f"Wcycle{n}"))
    elif target == "wilf-induced-cover":
        out.write(dot.rotation_dot(wilf_induced(n, "cover"), f"Wcover{n}"))
    else:
        kind = args.order if args.order in ("cycle", "cover") else "cover"
        try:
            R = wilf_reduced(n, kind)
        except ValueError as exc:
            print(f"error: {exc}", file=err)
            return 1
        out.write(dot.rotation_dot(R, f"reduced_{kind}{n}"))
    return 0


# --- stats ------------------------------------------------------------------------


def stats_row(n: int) -> dict:
    yc, yv = y_cycle_family(n), y_cover_family(n)
    cyc, cov = rule_edge_set(n, "cycle"), rule_edge_set(n, "cover")
    wc, wv = wilf_induced(n, "cycle"), wilf_induced(n, "cover")
    return {
        "n": n,
        "|Y_cycle|": len(yc),
        "|Y_cover|": len(yv),
        "tau_cycle": cyc.tau_edge_count(),
        "tau_cover": cov.tau_edge_count(),
        "size_cycle": cyc.size(),
        "size_cover": cov.size(),
        "faces_cycle": face_count(wc),
        "faces_cover": face_count(wv),
        "surplus_cycle": edge_surplus(wc),
        "surplus_cover": edge_surplus(wv),
    }


def cmd_stats(args) -> int:
    out, err = sys.stdout, sys.stderr
    ns = parse_n_range(args.n)
    bad = [n for n in ns if not 4 <= n <= 8]
    if bad:
        raise UsageError("stats covers 4 <= n <= 8")
    rows = [stats_row(n) for n in ns]
    cols = list(rows[0])
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    print("  ".join(c.rjust(widths[c]) for c in cols), file=out)
    for r in rows:
        print("  ".join(str(r[c]).rjust(widths[c]) for c in cols), file=out)
    return 0


# --- bench ------------------------------------------------------------------------


def _generic_ops(n: int, kind: RuleKind, p: tuple) -> int:
    """Element reads and writes of one generic step: build ``p tau``, find ``n``, maybe build ``p sigma``."""
    q = next_perm(p, kind)
    ops = n + p.index(n) + 2
    if q == p[1:] + p[:1]:
        ops += n
    return ops


def cmd_bench(args) -> int:
    out, err = sys.stdout, sys.stderr
    n = _single_n(args)
    order = args.order or "cycle"
    if order not in ("cycle", "path"):
        raise UsageError("bench runs order=cycle or order=path")
    if order == "cycle" and (n % 2 == 0 or n < 5):
        raise UsageError("bench order=cycle needs odd n >= 5")
    if n > 12:
        raise UsageError("bench is limited to n <= 12")
    reps = args.reps
    kind = RuleKind(order)

    def run():
        if args.engine == "generic":
            return generic_iterator(n, kind)
        if order == "cycle":
            return CycleGenerator(n, check=args.check)
        return PathGenerator(n, check=args.check)

    t0 = time.perf_counter()
    total = 0
    for _ in range(reps):
        for _p in run():
            total += 1
    elapsed = time.perf_counter() - t0
    rate = total / elapsed if elapsed else float("inf")
    print(f"n={n} order={order} engine={args.engine} reps={reps} outputs={total} "
          f"seconds={elapsed:.3f} rate={rate:,.0f}/s", file=out)
    if args.ops:
        steps = []
        if args.engine == "generic":
            for p in generic_iterator(n, kind):
                steps.append(_generic_ops(n, kind, p))
        elif order == "cycle":
            gen = CycleGenerator(n, instrument=True)
            for _p in gen:
                pass
            steps = gen.step_ops
        else:
            gen = PathGenerator(n, layout="ring")
            for _p in gen:
                steps.append(gen.ops)
        print(f"ops per step: max={max(steps)} mean={sum(steps) / len(steps):.2f}", file=out)
    if args.check:
        print("counter self-checks: passed", file=out)
    return 0


# --- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sigma-tau", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="stream the cycle, path or cover")
    g.add_argument("--n", default="5")
    g.add_argument("--order", choices=("cycle", "path", "cover"), default="cycle")
    g.add_argument("--format", choices=("lines", "compact", "moves"), default="lines")
    g.add_argument("--engine", choices=("generic", "fast"), default="generic")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="run checks and print CHECK lines")
    v.add_argument("check_names", nargs="*", metavar="CHECK", help=f"'all' or any of: {', '.join(CHECKS)}")
    v.add_argument("--checks", help="comma separated check names")
    v.add_argument("--n", default="4-7")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=100)
    v.set_defaults(func=cmd_verify)

    gr = sub.add_parser("graph", help="DOT export")
    gr.add_argument("--target", choices=GRAPH_TARGETS, default="digraph")
    gr.add_argument("--n", default="4")
    gr.add_argument("--m", type=int)
    gr.add_argument("--order", choices=("cycle", "cover"), help="highlight or reduce this rule's family")
    gr.set_defaults(func=cmd_graph)

    s = sub.add_parser("stats", help="table of family sizes, tau edges, faces and surpluses")
    s.add_argument("--n", default="4-7")
    s.set_defaults(func=cmd_stats)

    b = sub.add_parser("bench", help="throughput and per-step operation counts")
    b.add_argument("--n", default="9")
    b.add_argument("--order", choices=("cycle", "path"), default="cycle")
    b.add_argument("--engine", choices=("generic", "fast"), default="fast")
    b.add_argument("--reps", type=int, default=1)
    b.add_argument("--ops", action="store_true", help="also report instrumented per-step operation counts")
    b.add_argument("--check", action="store_true", help="recompute counters from scratch after each step")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sigma-tau: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())

"""Desk-scale checks of the constructions, each returning a :class:`Report`.

Every check prints as one line ``CHECK <name> n=<n> PASS|FAIL <details>``.
Sweeps over all ``n!`` permutations mark vertices in a Lehmer-rank bitset.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterable

from .cycles import cover_from_family, cover_from_family_fast, y_cover_family, y_cycle_family
from .generators import CycleGenerator, PathGenerator, generic_iterator
from .perms import (
    RotClass,
    VisitedSet,
    apply_sigma,
    apply_tau,
    format_perm,
    identity,
    missing_classes,
    reversed_identity,
)
from .rules import RuleKind, next_perm, path_endpoints, rule_edge_set
from .wilf import face_count_vs_cover


@dataclass
class Report:
    name: str
    n: int
    ok: bool
    details: str = ""
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"CHECK {self.name} n={self.n} {status} {self.details}".rstrip()

    def __str__(self) -> str:
        return self.line()


def _fmt(p) -> str:
    return format_perm(p, compact=len(p) <= 9)


def _fmt_family(ys: Iterable[RotClass]) -> str:
    return "{" + ", ".join(str(y) for y in sorted(ys)) + "}"


# --- sweeps ---------------------------------------------------------------------


def _sweep(n: int, kind: RuleKind, start) -> tuple[int, int, object, object]:
    """Follow rule successors from ``start`` until a vertex repeats.

    Returns ``(visited, tau_steps, repeated_vertex, last_vertex)``.
    """
    seen = VisitedSet(n)
    p = start
    seen.add(p)
    taus = 0
    while True:
        q = next_perm(p, kind)
        if q != p[1:] + p[:1]:
            taus += 1
        if not seen.add(q):
            return len(seen), taus, q, p
        p = q


def verify_hamilton_cycle(n: int) -> Report:
    name = "hamilton-cycle"
    if n % 2 == 0 or not 3 <= n <= 11:
        raise ValueError("hamilton-cycle needs odd n in 3..11")
    t0 = time.perf_counter()
    start = identity(n)
    visited, taus, repeat, last = _sweep(n, RuleKind.CYCLE, start)
    elapsed = time.perf_counter() - t0
    data = {"visited": visited, "tau_edges": taus, "seconds": elapsed}
    if repeat != start:
        return Report(name, n, False, f"repeated vertex {_fmt(repeat)} after {visited} vertices", data)
    if visited != factorial(n):
        return Report(name, n, False, f"closed early at {_fmt(last)} after {visited} of {factorial(n)} vertices", data)
    return Report(name, n, True, f"{visited} vertices, {taus} tau edges, {elapsed:.2f}s", data)


def verify_cover(n: int) -> Report:
    """The cover rule: one cycle of length ``2(n-1)`` through ``q`` and one with the rest."""
    name = "cover"
    if not 4 <= n <= 10:
        raise ValueError("cover needs 4 <= n <= 10")
    q = reversed_identity(n)
    lengths = []
    seen = VisitedSet(n)
    p = q
    while True:
        # walk cycle by cycle, restarting from the first unvisited vertex
        length = 0
        start = p
        while seen.add(p):
            length += 1
            p = next_perm(p, RuleKind.COVER)
        if p != start:
            return Report(name, n, False, f"walk from {_fmt(start)} re-entered at {_fmt(p)}")
        lengths.append(length)
        if len(seen) == factorial(n):
            break
        if len(lengths) > 2:
            break
        p = _first_unvisited(n, seen)
    expected = sorted([2 * (n - 1), factorial(n) - 2 * (n - 1)])
    data = {"lengths": lengths}
    if len(seen) != factorial(n) or len(lengths) != 2:
        return Report(name, n, False, f"size above 2: cycle lengths so far {lengths}", data)
    if lengths[0] != 2 * (n - 1) or sorted(lengths) != expected:
        return Report(name, n, False, f"cycle lengths {lengths}, expected {expected} with q on the short one", data)
    return Report(name, n, True, f"size 2, lengths {sorted(lengths)}", data)


def _first_unvisited(n: int, seen: VisitedSet):
    for p in itertools.permutations(range(1, n + 1)):
        if p not in seen:
            return p
    raise AssertionError("no unvisited vertex")


def verify_path(n: int) -> Report:
    name = "path"
    if not 3 <= n <= 10:
        raise ValueError("path needs 3 <= n <= 10")
    first, last = path_endpoints(n)
    seen = VisitedSet(n)
    count = 0
    end = None
    for p in generic_iterator(n, RuleKind.PATH):
        if count == 0 and p != first:
            return Report(name, n, False, f"starts at {_fmt(p)}, expected {_fmt(first)}")
        if not seen.add(p):
            return Report(name, n, False, f"repeated vertex {_fmt(p)}")
        count += 1
        end = p
    data = {"visited": count, "first": first, "last": end}
    if count != factorial(n):
        return Report(name, n, False, f"visited {count} of {factorial(n)} vertices", data)
    if end != last:
        return Report(name, n, False, f"ends at {_fmt(end)}, expected {_fmt(last)}", data)
    return Report(name, n, True, f"{count} vertices from {_fmt(first)} to {_fmt(last)}", data)


def verify_even_cycle(n: int) -> Report:
    """The cycle rule for even ``n`` should give a cover of size two."""
    name = "even-cycle"
    if n % 2 or not 4 <= n <= 10:
        raise ValueError("even-cycle needs even n in 4..10")
    cover = rule_edge_set(n, RuleKind.CYCLE) if n <= 8 else None
    if cover is not None:
        lengths = cover.cycle_lengths()
    else:
        lengths = _cycle_lengths_by_walk(n, RuleKind.CYCLE)
    ok = len(lengths) == 2
    return Report(name, n, ok, f"size {len(lengths)}, lengths {lengths}", {"lengths": lengths})


def _cycle_lengths_by_walk(n: int, kind: RuleKind) -> list[int]:
    seen = VisitedSet(n)
    lengths = []
    p = identity(n)
    while True:
        length = 0
        while seen.add(p):
            length += 1
            p = next_perm(p, kind)
        lengths.append(length)
        if len(seen) == factorial(n):
            return sorted(lengths)
        p = _first_unvisited(n, seen)


def verify_rule_family_equivalence(n: int, kinds: Iterable[str] = ("cover", "cycle")) -> Report:
    """Rule edge sets against ``E_sigma`` toggled by the family's alternating cycles."""
    name = "rule-equivalence"
    if not 4 <= n <= 7:
        raise ValueError("rule-equivalence needs 4 <= n <= 7")
    notes = []
    for kind in kinds:
        rule = rule_edge_set(n, kind)
        fam = y_cover_family(n) if kind == "cover" else y_cycle_family(n)
        algebra = cover_from_family(n, fam)
        if rule != algebra:
            bad = next(p for p in sorted(rule.pred) if rule.pred[p] != algebra.pred[p])
            return Report(
                name, n, False,
                f"{kind}: vertex {_fmt(bad)} entered by {rule.pred[bad].label} in the rule, "
                f"{algebra.pred[bad].label} in the family construction",
            )
        notes.append(f"{kind} equal ({len(rule.pred)} entering edges)")
    return Report(name, n, True, ", ".join(notes))


def verify_face_lemma(n: int, trials: int = 100, seed: int = 0) -> Report:
    """Faces plus isolated vertices against cover size, canonical families and random ``Y``.

    Random trials run for ``n <= 5``; larger ``n`` checks the canonical families only.
    """
    name = "face-lemma"
    if not 4 <= n <= 7:
        raise ValueError("face-lemma needs 4 <= n <= 7")
    cases: list[tuple[str, frozenset]] = [
        ("cover family", y_cover_family(n)),
        ("cycle family", y_cycle_family(n)),
        ("empty", frozenset()),
    ]
    rng = random.Random(seed)
    M = missing_classes(n)
    if n <= 5:
        for _ in range(trials):
            cases.append(("random", frozenset(y for y in M if rng.random() < 0.5)))
    for label, ys in cases:
        faces, size = face_count_vs_cover(n, ys)
        if faces != size:
            return Report(name, n, False, f"{label} Y={_fmt_family(ys)}: {faces} faces+isolated, cover size {size}")
    random_count = len(cases) - 3
    return Report(name, n, True, f"3 fixed families and {random_count} random families agree (seed {seed})")


# --- exhaustive search ------------------------------------------------------------


def count_hamilton_cycles(n: int, limit: int | None = None) -> int:
    """Directed Hamilton cycles of D(n) through ``1 2 ... n``, by backtracking."""
    start = identity(n)
    total = factorial(n)
    on_path = {start}
    found = 0

    def extend(p, depth):
        nonlocal found
        for q in (apply_sigma(p), apply_tau(p)):
            if limit is not None and found >= limit:
                return
            if q == start:
                if depth == total:
                    found += 1
            elif q not in on_path:
                on_path.add(q)
                extend(q, depth + 1)
                on_path.discard(q)

    extend(start, 1)
    return found


def find_hamilton_path(n: int, start, end) -> list | None:
    """Some Hamilton path of D(n) from ``start`` to ``end``, or None."""
    total = factorial(n)
    path = [start]
    on_path = {start}

    def extend(p):
        if len(path) == total:
            return p == end
        for q in (apply_sigma(p), apply_tau(p)):
            if q in on_path or (q == end and len(path) + 1 < total):
                continue
            on_path.add(q)
            path.append(q)
            if extend(q):
                return True
            path.pop()
            on_path.discard(q)
        return False

    return list(path) if extend(start) else None


def verify_no_hamilton_even(n: int = 4) -> Report:
    name = "no-even-hamilton"
    if n != 4:
        raise ValueError("no-even-hamilton is exhaustive only at n = 4")
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 200))
    try:
        t0 = time.perf_counter()
        cycles = count_hamilton_cycles(n)
        elapsed = time.perf_counter() - t0
        first, last = path_endpoints(n)
        path = find_hamilton_path(n, first, last)
        small = count_hamilton_cycles(3)
    finally:
        sys.setrecursionlimit(limit)
    data = {"cycles": cycles, "seconds": elapsed, "path_found": path is not None, "n3_cycles": small}
    ok = cycles == 0 and path is not None and small > 0
    details = (
        f"{cycles} Hamilton cycles in {elapsed:.4f}s; Hamilton path {_fmt(first)}..{_fmt(last)} "
        f"{'found' if path else 'missing'}; n=3 has {small} Hamilton cycles"
    )
    return Report(name, n, ok, details, data)


def minimality_table(n: int) -> dict[int, list[int]]:
    """Cover sizes reached by every family ``Y``, keyed by ``|Y|``."""
    M = missing_classes(n)
    table: dict[int, list[int]] = {}
    for k in range(len(M) + 1):
        sizes = sorted({cover_from_family_fast(n, ys).size() for ys in itertools.combinations(M, k)})
        table[k] = sizes
    return table


def verify_minimality(n: int, samples: int = 200, seed: int = 0) -> Report:
    """Smaller families than the cover family should not reach a cover of size two.

    ``n = 4`` is exhaustive over all ``2^8`` families.  ``n = 5`` samples
    small families at random and reports what it sees without asserting.
    """
    name = "minimality"
    if n not in (4, 5):
        raise ValueError("minimality runs at n = 4 (exhaustive) or n = 5 (sampled)")
    cover_size = len(y_cover_family(n))
    bound = n - 2
    M = missing_classes(n)
    if n == 4:
        smaller = []  # (size, Y) for |Y| < |Y_cover|
        for k in range(cover_size):
            for ys in itertools.combinations(M, k):
                smaller.append((cover_from_family_fast(n, ys).size(), ys))
        below_bound = [ys for s, ys in smaller if s < bound]
        too_small = [ys for s, ys in smaller if s <= 2]
        unifacial = [
            ys for ys in itertools.combinations(M, cover_size) if cover_from_family_fast(n, ys).size() == 1
        ]
        data = {"bound_violations": below_bound, "size_two_or_less": too_small, "unifacial": unifacial}
        parts = [
            f"|Y|<{cover_size} gives size >= {bound}: {'yes' if not below_bound else 'no'}",
            f"|Y|={cover_size} gives size 1: {'never' if not unifacial else 'yes'}",
        ]
        if too_small:
            ys = too_small[0]
            parts.append(
                f"counterexample Y={_fmt_family(ys)} of size {len(ys)} gives a size-2 cover "
                f"({len(too_small)} such families)"
            )
        ok = not below_bound and not unifacial and not too_small
        return Report(name, n, ok, "; ".join(parts), data)
    rng = random.Random(seed)
    low = None
    for _ in range(samples):
        k = rng.randrange(cover_size)
        ys = rng.sample(M, k)
        s = cover_from_family_fast(n, ys).size()
        low = s if low is None else min(low, s)
    return Report(name, n, True, f"sampled {samples} families with |Y|<{cover_size}: least cover size {low} (reported only)")


# --- generators ---------------------------------------------------------------------


def verify_generators(n: int) -> Report:
    """Fast engines against the generic successor-rule iteration, with counter self-checks."""
    name = "generators"
    if not 3 <= n <= 9:
        raise ValueError("generators needs 3 <= n <= 9")
    notes = []
    oracle = list(generic_iterator(n, RuleKind.PATH))
    for layout in ("array", "ring"):
        got = list(PathGenerator(n, layout, check=True))
        if got != oracle:
            return Report(name, n, False, f"path/{layout}: {_first_difference(got, oracle)}")
    notes.append("path array+ring equal")
    if n % 2 and n >= 5:
        oracle = list(generic_iterator(n, RuleKind.CYCLE))
        gen = CycleGenerator(n, instrument=True, check=True)
        got = list(gen)
        if got != oracle:
            return Report(name, n, False, f"cycle: {_first_difference(got, oracle)}")
        notes.append(f"cycle equal, max {max(gen.step_ops)} link touches per step")
    return Report(name, n, True, ", ".join(notes))


def _first_difference(got: list, want: list) -> str:
    for i, (a, b) in enumerate(zip(got, want)):
        if a != b:
            return f"step {i}: got {_fmt(a)}, expected {_fmt(b)}"
    return f"lengths differ: {len(got)} vs {len(want)}"


# --- registry -----------------------------------------------------------------------

CHECKS: dict[str, tuple[Callable[..., Report], Callable[[int], bool]]] = {
    "hamilton-cycle": (verify_hamilton_cycle, lambda n: n % 2 == 1 and 3 <= n <= 11),
    "cover": (verify_cover, lambda n: 4 <= n <= 10),
    "path": (verify_path, lambda n: 3 <= n <= 10),
    "even-cycle": (verify_even_cycle, lambda n: n % 2 == 0 and 4 <= n <= 10),
    "rule-equivalence": (verify_rule_family_equivalence, lambda n: 4 <= n <= 7),
    "face-lemma": (verify_face_lemma, lambda n: 4 <= n <= 7),
    "no-even-hamilton": (verify_no_hamilton_even, lambda n: n == 4),
    "minimality": (verify_minimality, lambda n: n in (4, 5)),
    "generators": (verify_generators, lambda n: 3 <= n <= 9),
}


def applicable(check: str, n: int) -> bool:
    return CHECKS[check][1](n)


def run_check(check: str, n: int, seed: int = 0, trials: int = 100) -> Report:
    fn, domain = CHECKS[check]
    if not domain(n):
        raise ValueError(f"check {check} does not apply to n={n}")
    if check == "face-lemma":
        return fn(n, trials=trials, seed=seed)
    if check == "minimality":
        return fn(n, seed=seed)
    return fn(n)


def run_checks(checks: Iterable[str], ns: Iterable[int], seed: int = 0, trials: int = 100) -> list[Report]:
    """Every requested check at every ``n`` in its domain; others are skipped."""
    out = []
    for n in ns:
        for check in checks:
            if applicable(check, n):
                out.append(run_check(check, n, seed, trials))
    return out

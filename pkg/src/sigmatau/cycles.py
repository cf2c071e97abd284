"""Sigma-cycles, alternating cycles and cycle covers built from them.

Every cycle cover of the sigma-tau graph is the set of all sigma edges with
the edges of some alternating cycles toggled: the sigma edges on the chosen
alternating cycles are dropped and their tau edges are taken instead.  The
alternating cycles are indexed by missing-one rotation classes, so a cover
is described by a family ``Y`` of such classes.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator

from .perms import (
    SIGMA,
    TAU,
    LabeledEdge,
    Perm,
    RotClass,
    all_perms,
    apply_sigma,
    apply_sigma_inv,
    apply_tau,
    canonical,
    consistent,
    walk_edges,
)


def sigma_cycle(x: RotClass) -> frozenset[LabeledEdge]:
    if not x.is_full:
        raise ValueError(f"{x} is not a full rotation class")
    return walk_edges(x.rep, "s" * x.n)


def alt_cycle_start(y: RotClass) -> Perm:
    """``q1 m q2 ... q_{n-1}`` for the class representative ``q`` missing ``m``."""
    if y.is_full:
        raise ValueError(f"{y} is not a missing-one class")
    q = y.rep
    return (q[0], y.missing) + q[1:]


def alt_cycle(y: RotClass) -> frozenset[LabeledEdge]:
    """The ``2n - 2`` edges of the alternating cycle ``a(Y)``."""
    return walk_edges(alt_cycle_start(y), "tr" * (y.n - 1))


def sink(x: RotClass, y: RotClass) -> Perm:
    """Head of the one sigma edge shared by ``s(X)`` and ``a(Y)``."""
    if not consistent(x, y):
        raise ValueError(f"{x} and {y} are not consistent")
    return x.rotation_starting_with(y.missing)


def _check_order(n: int, minimum: int = 4) -> None:
    if n < minimum:
        raise ValueError(f"n must be at least {minimum}, got {n}")


def fix_subset(n: int, r: int, m: int) -> frozenset[RotClass]:
    """Classes ``[n r p3 ... p_{n-1}]`` missing ``m`` (``r`` sits right of ``n``)."""
    if not (1 <= r <= n - 1 and 1 <= m <= n - 1 and r != m):
        raise ValueError(f"invalid fixed symbols r={r}, m={m} for n={n}")
    free = [x for x in range(1, n) if x not in (r, m)]
    return frozenset(canonical((n, r) + tail, n) for tail in permutations(free))


def _successor_symbol(r: int, n: int) -> int:
    """``(r mod n-1) + 1``: the missing symbol paired with ``r`` in the cover family."""
    return r % (n - 1) + 1


def _cycle_partner(r: int, n: int) -> int:
    # same as the cover pairing except r = n-1 is paired with 2
    return r + 1 if r < n - 1 else 2


def hub_class(n: int) -> RotClass:
    """``[1 2 ... n-1]``, the single class of the cycle family missing ``n``."""
    return RotClass(tuple(range(1, n)), n)


def y_cover_family(n: int) -> frozenset[RotClass]:
    _check_order(n)
    out: set[RotClass] = set()
    for r in range(1, n):
        out |= fix_subset(n, r, _successor_symbol(r, n))
    return frozenset(out)


def y_cycle_family(n: int) -> frozenset[RotClass]:
    _check_order(n)
    out: set[RotClass] = {hub_class(n)}
    for r in range(1, n):
        out |= fix_subset(n, r, _cycle_partner(r, n))
    return frozenset(out)


class CycleCover:
    """A cycle cover stored as the entering edge of every vertex."""

    def __init__(self, n: int, pred: dict[Perm, LabeledEdge]):
        self.n = n
        self.pred = pred
        self._succ: dict[Perm, LabeledEdge] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[LabeledEdge]) -> "CycleCover":
        """Build from an edge set, checking in- and out-degree one everywhere."""
        pred: dict[Perm, LabeledEdge] = {}
        tails: set[Perm] = set()
        for e in edges:
            if e.head in pred:
                raise ValueError(f"vertex {e.head} has in-degree above one")
            if e.tail in tails:
                raise ValueError(f"vertex {e.tail} has out-degree above one")
            pred[e.head] = e
            tails.add(e.tail)
        for p in all_perms(n):
            if p not in pred:
                raise ValueError(f"vertex {p} has no entering edge")
        return cls(n, pred)

    @property
    def succ(self) -> dict[Perm, LabeledEdge]:
        if self._succ is None:
            self._succ = {e.tail: e for e in self.pred.values()}
        return self._succ

    def edges(self) -> frozenset[LabeledEdge]:
        return frozenset(self.pred.values())

    def cycles(self) -> Iterator[list[Perm]]:
        """Vertex sequences of the disjoint cycles, each started at its least vertex."""
        succ = self.succ
        seen: set[Perm] = set()
        for start in sorted(self.pred):
            if start in seen:
                continue
            cyc = []
            p = start
            while p not in seen:
                seen.add(p)
                cyc.append(p)
                p = succ[p].head
            yield cyc

    def size(self) -> int:
        return sum(1 for _ in self.cycles())

    def cycle_lengths(self) -> list[int]:
        return sorted(len(c) for c in self.cycles())

    def tau_edge_count(self) -> int:
        return sum(1 for e in self.pred.values() if e.label == TAU)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleCover):
            return NotImplemented
        return self.n == other.n and self.pred == other.pred

    def __repr__(self) -> str:
        return f"CycleCover(n={self.n}, size={self.size()})"


def cover_size(c: CycleCover) -> int:
    return c.size()


def tau_edge_count(c: CycleCover) -> int:
    return c.tau_edge_count()


def sigma_edges(n: int) -> frozenset[LabeledEdge]:
    return frozenset(LabeledEdge(p, apply_sigma(p), SIGMA) for p in all_perms(n))


def cover_from_family(n: int, family: Iterable[RotClass]) -> CycleCover:
    """All sigma edges symmetric-differenced with the chosen alternating cycles."""
    toggled: set[LabeledEdge] = set()
    for y in family:
        if y.n != n or y.is_full:
            raise ValueError(f"{y} is not a missing-one class of order {n}")
        toggled |= alt_cycle(y)
    return CycleCover.from_edges(n, sigma_edges(n) ^ toggled)


def cover_from_family_fast(n: int, family: Iterable[RotClass]) -> CycleCover:
    """Same cover as :func:`cover_from_family` without materialising the edge sets.

    The tau edge ``(p tau, p)`` lies on ``a(Y)`` exactly when ``p`` starts
    with ``Y``'s missing symbol and ``p[1:]`` is a rotation of ``Y``.
    """
    family = frozenset(family)
    pred = {}
    for p in all_perms(n):
        if canonical(p[1:], n) in family:
            pred[p] = LabeledEdge(apply_tau(p), p, TAU)
        else:
            pred[p] = LabeledEdge(apply_sigma_inv(p), p, SIGMA)
    return CycleCover(n, pred)


# --- parent functions -------------------------------------------------------


def _n_first(y: RotClass) -> tuple[int, ...]:
    """Symbols after ``n`` in the rotation of ``y`` that starts with ``n``."""
    return y.rotation_starting_with(y.n)[1:]


def _parent(y: RotClass, partner) -> RotClass:
    n = y.n
    p = _n_first(y)  # p1 p2 ... p_{n-2}
    p0 = partner(p[0], n)
    if y.missing != p0:
        raise ValueError(f"{y} is not in the family")
    px = partner(p0, n)
    x = p.index(px)
    return canonical((n, p0) + p[:x] + p[x + 1:], n)


def parent_cover(y: RotClass) -> RotClass:
    """Parent of ``[n p1 ... p_{n-2}]`` in the cover family: drop ``p_x``, insert ``p0`` after ``n``."""
    if y not in y_cover_family(y.n):
        raise ValueError(f"{y} is not in the cover family")
    return _parent(y, _successor_symbol)


def parent_cycle(y: RotClass) -> RotClass:
    if y == hub_class(y.n):
        raise ValueError(f"the hub {y} has no parent")
    if y not in y_cycle_family(y.n):
        raise ValueError(f"{y} is not in the cycle family")
    return _parent(y, _cycle_partner)


def chain_length_cover(y: RotClass) -> int:
    """Largest ``k <= n-2`` with each ``p_i`` the cover partner of ``p_{i+1}`` for ``i < k``."""
    n = y.n
    p = _n_first(y)
    k = 1
    while k < n - 2 and p[k - 1] == _successor_symbol(p[k], n):
        k += 1
    return k


def chain_length_cycle(y: RotClass) -> int:
    """Largest ``k <= n-3`` with ``p1 ... pk`` free of ``1`` and chained by cycle partners."""
    n = y.n
    p = _n_first(y)
    k = 0
    while k < n - 3 and p[k] != 1 and (k == 0 or p[k - 1] == _cycle_partner(p[k], n)):
        k += 1
    return k


def rim_cover(n: int) -> list[RotClass]:
    """The parent cycle ``[n n-1 ... 2] -> [n 1 n-1 ... 3] -> ...`` of the cover family."""
    start = canonical(tuple(range(n, 1, -1)), n)
    return _follow_until_repeat(start, parent_cover)


def rim_cycle(n: int) -> list[RotClass]:
    """The parent cycle through ``[n n-1 ... 3 1]`` in the cycle family."""
    start = canonical(tuple(range(n, 2, -1)) + (1,), n)
    return _follow_until_repeat(start, parent_cycle)


def _follow_until_repeat(start: RotClass, step) -> list[RotClass]:
    out = [start]
    seen = {start}
    y = step(start)
    while y not in seen:
        out.append(y)
        seen.add(y)
        y = step(y)
    if y != start:
        raise ValueError(f"parent walk from {start} does not close on itself")
    return out

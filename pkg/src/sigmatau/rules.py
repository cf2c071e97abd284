"""Local rules giving the entering edge of every permutation.

Three rules share one skeleton.  Let ``i`` be the position of ``n`` in
``p = p0 ... p_{n-1}`` and ``r = p[(i mod n-1) + 1]`` (the symbol after
``n``, wrapping to ``p1`` when ``n`` is last).  A tau edge ``(p tau, p)``
enters ``p`` when

* ``cycle``: ``p0 = r + 1`` for ``r < n-1``, or ``p0 = 2`` for ``r = n-1``,
  or ``p0 = n`` and ``p1 ... p_{n-1}`` is a rotation of ``1 2 ... n-1``;
* ``cover``: ``p0 = (r mod n-1) + 1``;
* ``path``: the cover condition, except that ``q sigma`` (with
  ``q = n n-1 ... 1``) is entered by a sigma edge and ``q tau`` has no
  entering edge at all.

Otherwise the sigma edge ``(p sigma^-1, p)`` enters ``p``.
"""

from __future__ import annotations

import enum
from typing import Iterator

from .cycles import CycleCover
from .perms import (
    SIGMA,
    TAU,
    LabeledEdge,
    Perm,
    all_perms,
    apply_sigma,
    apply_sigma_inv,
    apply_tau,
    reversed_identity,
)


class RuleKind(str, enum.Enum):
    CYCLE = "cycle"
    COVER = "cover"
    PATH = "path"


class PathEndpointError(ValueError):
    pass


def locate_r(p: Perm) -> tuple[int, int]:
    n = len(p)
    i = p.index(n)
    return i, p[i % (n - 1) + 1]


def path_endpoints(n: int) -> tuple[Perm, Perm]:
    """``(q tau, q sigma tau)``: first and last vertex of the Hamilton path."""
    q = reversed_identity(n)
    return apply_tau(q), apply_tau(apply_sigma(q))


def _is_identity_rotation(p: Perm, start: int) -> bool:
    # p[start:] is a rotation of 1 2 ... len(p[start:])
    m = len(p) - start
    prev = p[start]
    for x in p[start + 1:]:
        if x != prev % m + 1:
            return False
        prev = x
    return True


def tau_enters(p: Perm, kind: RuleKind) -> bool:
    """Whether the rule's entering edge of ``p`` is the tau edge."""
    n = len(p)
    i = p.index(n)
    r = p[i % (n - 1) + 1]
    p0 = p[0]
    if kind is RuleKind.CYCLE:
        if r < n - 1:
            if p0 == r + 1:
                return True
        elif p0 == 2:
            return True
        return p0 == n and _is_identity_rotation(p, 1)
    if p0 != r % (n - 1) + 1:
        return False
    if kind is RuleKind.PATH:
        # q sigma = n-1 n-2 ... 1 n is entered by sigma instead
        return p != tuple(range(n - 1, 0, -1)) + (n,)
    return True


def pred(p: Perm, kind: RuleKind | str) -> LabeledEdge:
    kind = RuleKind(kind)
    if kind is RuleKind.PATH and p == path_endpoints(len(p))[0]:
        raise PathEndpointError("path start has no predecessor")
    if tau_enters(p, kind):
        return LabeledEdge(apply_tau(p), p, TAU)
    return LabeledEdge(apply_sigma_inv(p), p, SIGMA)


def succ(p: Perm, kind: RuleKind | str) -> LabeledEdge:
    """The exiting edge: ``(p, p tau)`` when the rule lets tau enter ``p tau``."""
    kind = RuleKind(kind)
    pt = apply_tau(p)
    if kind is RuleKind.PATH:
        start, end = path_endpoints(len(p))
        if p == end:
            raise PathEndpointError("path end has no successor")
        if pt == start:
            return LabeledEdge(p, apply_sigma(p), SIGMA)
    if tau_enters(pt, kind):
        return LabeledEdge(p, pt, TAU)
    return LabeledEdge(p, apply_sigma(p), SIGMA)


def next_perm(p: Perm, kind: RuleKind) -> Perm:
    """Successor vertex only; the hot loop of the exhaustive sweeps."""
    pt = (p[1], p[0]) + p[2:]
    if tau_enters(pt, kind):
        return pt
    return p[1:] + p[:1]


def rule_edge_set(n: int, kind: RuleKind | str):
    """All entering edges of the rule.

    Returns a :class:`CycleCover` for ``cycle``/``cover`` and a frozenset of
    the ``n! - 1`` path edges for ``path``.
    """
    kind = RuleKind(kind)
    if kind is RuleKind.PATH:
        start = path_endpoints(n)[0]
        return frozenset(pred(p, kind) for p in all_perms(n) if p != start)
    return CycleCover(n, {p: pred(p, kind) for p in all_perms(n)})


def iterate(n: int, kind: RuleKind | str, start: Perm | None = None) -> Iterator[Perm]:
    """Follow the rule's successors.

    Paths start at ``q tau`` and stop after ``n!`` vertices; cycles and
    covers stop on returning to ``start`` (default ``1 2 ... n``).
    """
    kind = RuleKind(kind)
    if kind is RuleKind.PATH:
        first, last = path_endpoints(n)
        if start is not None and tuple(start) != first:
            raise ValueError(f"the path must start at {first}")
        p = first
        yield p
        q = reversed_identity(n)
        while p != last:
            # q leaves by sigma: the path drops the cover edge (q, q tau)
            p = apply_sigma(p) if p == q else next_perm(p, RuleKind.COVER)
            yield p
        return
    p = tuple(start) if start is not None else tuple(range(1, n + 1))
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"{p!r} is not a permutation of 1..{n}")
    first = p
    while True:
        yield p
        p = next_perm(p, kind)
        if p == first:
            return

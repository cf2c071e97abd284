"""Wilf's rotation system and the face/cycle correspondence.

Wilf's graph joins each full rotation class to every missing-one class that
is consistent with it.  Around a full class ``[p1 ... pn]`` the edges are
ordered by deleting ``p1``, ``p2``, ... in turn; around a missing-one class
``[q1 ... q_{n-1}]`` missing ``m`` they are ordered by inserting ``m`` from
the rightmost gap leftwards, ending with the gap just after ``q1``.

Inducing the system on all full classes plus a family ``Y`` gives a system
whose faces plus isolated vertices count the cycles of the cover
``cover_from_family(n, Y)``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .cycles import cover_from_family, sink, y_cover_family, y_cycle_family
from .perms import LabeledEdge, RotClass, canonical, full_classes, missing_classes, walk_edges
from .rotation import Face, RotationSystem, components, face_count, faces, induced, reduce


@lru_cache(maxsize=8)
def wilf(n: int) -> RotationSystem:
    if n < 3:
        raise ValueError("Wilf's system needs n >= 3")
    P = full_classes(n)
    M = missing_classes(n)
    edges: dict[int, tuple[RotClass, RotClass]] = {}
    index: dict[tuple[RotClass, RotClass], int] = {}
    theta: dict[RotClass, list] = {}
    for x in P:
        ring = []
        for k in range(n):
            y = canonical(x.rep[:k] + x.rep[k + 1:], n)
            e = len(edges)
            edges[e] = (x, y)
            index[x, y] = e
            ring.append((e, 0))
        theta[x] = ring
    for y in M:
        q, m = y.rep, y.missing
        theta[y] = [(index[canonical(q[:j] + (m,) + q[j:], n), y], 1) for j in range(n - 1, 0, -1)]
    return RotationSystem(P + M, edges, theta)


def family(n: int, kind: str) -> frozenset[RotClass]:
    if kind == "cycle":
        return y_cycle_family(n)
    if kind == "cover":
        return y_cover_family(n)
    raise ValueError(f"unknown family kind {kind!r}")


def wilf_on(n: int, ys: Iterable[RotClass]) -> RotationSystem:
    """``W(n)`` induced on every full class plus ``ys``."""
    return induced(wilf(n), full_classes(n) + sorted(set(ys)))


def wilf_induced(n: int, kind: str) -> RotationSystem:
    return wilf_on(n, family(n, kind))


def wilf_reduced(n: int, kind: str) -> RotationSystem:
    """``wilf_induced`` with every full-class vertex deleted or smoothed away."""
    R = wilf_induced(n, kind)
    full = [v for v in R.vertices if v.is_full]
    out = reduce(R, only=full)
    leftover = [v for v in out.vertices if v.is_full]
    if leftover:
        raise ValueError(f"full classes survived the reduction: {', '.join(map(str, leftover[:5]))}")
    return out


def faces_plus_isolated(R: RotationSystem) -> int:
    return face_count(R) + len(R.isolated())


def face_count_vs_cover(n: int, ys: Iterable[RotClass]) -> tuple[int, int]:
    """``(faces + isolated vertices of W(n)[P ∪ Y], size of the cover for Y)``; equal by design."""
    ys = set(ys)
    return faces_plus_isolated(wilf_on(n, ys)), cover_from_family(n, ys).size()


def skip_count(n: int, arrive: int, leave: int) -> int:
    """Edges of the full Wilf system passed over between two edge ids at a full class."""
    W = wilf(n)
    _, ka = W._where[(arrive, 0)]
    _, kl = W._where[(leave, 0)]
    return (kl - ka - 1) % n


def face_word(n: int, R: RotationSystem, face: Face) -> tuple[tuple[int, ...], str]:
    """Start vertex and sigma/tau word of the cover cycle matching ``face``.

    The face alternates family vertices and full classes.  Each visit
    ``[q] -e-> [p] -f-> ...`` contributes ``sigma^s tau`` where ``s`` counts
    the edges of the full system skipped between ``e`` and ``f`` around
    ``[p]``; the walk starts at the sink of the first visit.
    """
    darts = list(face)
    k = next(i for i, d in enumerate(darts) if not R.dart_tail(d).is_full)
    darts = darts[k:] + darts[:k]
    start = None
    word = []
    for i in range(0, len(darts), 2):
        e, f = darts[i], darts[i + 1]
        q, p = R.dart_tail(e), R.dart_head(e)
        if start is None:
            start = sink(p, q)
        word.append("s" * skip_count(n, e[0], f[0]) + "t")
    return start, "".join(word)


def face_to_cover_cycle(n: int, R: RotationSystem, face: Face) -> frozenset[LabeledEdge]:
    start, word = face_word(n, R, face)
    return walk_edges(start, word)


def cover_cycles_from_faces(n: int, ys: Iterable[RotClass]) -> list[frozenset[LabeledEdge]]:
    """Every cycle of the cover for ``ys``: one per face, plus a sigma-cycle per isolated full class."""
    from .cycles import sigma_cycle

    R = wilf_on(n, ys)
    out = [face_to_cover_cycle(n, R, f) for f in faces(R)]
    out.extend(sigma_cycle(x) for x in R.isolated())
    return out


def is_connected(R: RotationSystem) -> bool:
    return components(R) == 1

"""Rotation systems (combinatorial embeddings) and their faces.

A rotation system is a multigraph, loops and parallel edges allowed, with a
cyclic order of edge-ends around each vertex.  Edge ``e`` has two ends,
``(e, 0)`` at ``edges[e][0]`` and ``(e, 1)`` at ``edges[e][1]``; a loop puts
both ends on the same vertex.

A dart is named by the end it leaves from.  The dart after ``(e, s)`` leaves
the arrival vertex along the end that follows ``(e, 1 - s)`` in that
vertex's cyclic order.  Faces are the orbits of this map.
"""

from __future__ import annotations

import random
from typing import Hashable, Iterable, Mapping, Sequence

End = tuple[int, int]
Dart = End
Face = tuple[Dart, ...]


class RotationSystem:
    def __init__(
        self,
        vertices: Iterable[Hashable],
        edges: Mapping[int, tuple[Hashable, Hashable]],
        theta: Mapping[Hashable, Sequence[End]],
        edge_labels: Mapping[int, str] | None = None,
    ):
        self.vertices = tuple(vertices)
        self.edges = dict(edges)
        self.theta = {v: tuple(theta.get(v, ())) for v in self.vertices}
        self.edge_labels = dict(edge_labels or {})
        self._where: dict[End, tuple[Hashable, int]] = {}
        for v, ends in self.theta.items():
            for k, end in enumerate(ends):
                if end in self._where:
                    raise ValueError(f"edge end {end} appears twice")
                self._where[end] = (v, k)
        for e, (a, b) in self.edges.items():
            for side, v in ((0, a), (1, b)):
                if self._where.get((e, side), (None,))[0] != v:
                    raise ValueError(f"end {(e, side)} is not in the rotation of {v!r}")
        if len(self._where) != 2 * len(self.edges):
            raise ValueError("rotation lists mention edges that do not exist")

    def __repr__(self) -> str:
        return f"RotationSystem(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def degree(self, v) -> int:
        return len(self.theta[v])

    def endpoint(self, end: End):
        e, s = end
        return self.edges[e][s]

    def other_end(self, end: End) -> End:
        return (end[0], 1 - end[1])

    def neighbours(self, v) -> list:
        return [self.endpoint(self.other_end(end)) for end in self.theta[v]]

    def darts(self) -> list[Dart]:
        return sorted(self._where)

    def next_dart(self, d: Dart) -> Dart:
        arrival = (d[0], 1 - d[1])
        v, k = self._where[arrival]
        ring = self.theta[v]
        return ring[(k + 1) % len(ring)]

    def dart_tail(self, d: Dart):
        return self.endpoint(d)

    def dart_head(self, d: Dart):
        return self.edges[d[0]][1 - d[1]]

    def isolated(self) -> list:
        return [v for v in self.vertices if not self.theta[v]]

    def copy(self) -> "RotationSystem":
        return RotationSystem(self.vertices, self.edges, self.theta, self.edge_labels)


def faces(R: RotationSystem) -> list[Face]:
    """Partition of the darts into faces, each started at its least dart."""
    seen: set[Dart] = set()
    out = []
    for start in R.darts():
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = R.next_dart(d)
        out.append(tuple(face))
    return out


def face_count(R: RotationSystem) -> int:
    return len(faces(R))


def face_vertices(R: RotationSystem, face: Face) -> list:
    return [R.dart_tail(d) for d in face]


def edge_surplus(R: RotationSystem) -> int:
    return len(R.edges) - len(R.vertices) + 1


def components(R: RotationSystem) -> int:
    parent = {v: v for v in R.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    count = len(R.vertices)
    for a, b in R.edges.values():
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


def induced(R: RotationSystem, keep: Iterable) -> RotationSystem:
    """Subsystem on ``keep``: edges with both ends kept, rotations with the rest omitted."""
    keep = set(keep)
    unknown = keep.difference(R.vertices)
    if unknown:
        raise ValueError(f"not vertices of the system: {sorted(map(str, unknown))}")
    vertices = [v for v in R.vertices if v in keep]
    edges = {e: ab for e, ab in R.edges.items() if ab[0] in keep and ab[1] in keep}
    theta = {v: [end for end in R.theta[v] if end[0] in edges] for v in vertices}
    labels = {e: lab for e, lab in R.edge_labels.items() if e in edges}
    return RotationSystem(vertices, edges, theta, labels)


# --- reductions --------------------------------------------------------------


class _Mutable:
    """Scratch copy used while applying many reductions in a row."""

    def __init__(self, R: RotationSystem):
        self.vertices = dict.fromkeys(R.vertices)
        self.edges = dict(R.edges)
        self.theta = {v: list(ends) for v, ends in R.theta.items()}
        self.labels = dict(R.edge_labels)
        self.next_id = max(self.edges, default=-1) + 1

    def freeze(self) -> RotationSystem:
        return RotationSystem(self.vertices, self.edges, self.theta, self.labels)

    def far_vertex(self, end: End):
        e, s = end
        return self.edges[e][1 - s]

    def delete_leaf(self, v) -> None:
        ends = self.theta[v]
        if len(ends) != 1:
            raise ValueError(f"{v!r} has degree {len(ends)}, not 1")
        e, s = ends[0]
        u = self.far_vertex((e, s))
        self.theta[u].remove((e, 1 - s))
        del self.edges[e]
        self.labels.pop(e, None)
        del self.theta[v]
        del self.vertices[v]

    def smooth(self, v) -> None:
        ends = self.theta[v]
        if len(ends) != 2:
            raise ValueError(f"{v!r} has degree {len(ends)}, not 2")
        (e1, s1), (e2, s2) = ends
        x, y = self.far_vertex((e1, s1)), self.far_vertex((e2, s2))
        if e1 == e2 or x == y or v in (x, y):
            raise ValueError(f"{v!r} is not adjacent to two distinct vertices")
        new = self.next_id
        self.next_id += 1
        # the new edge takes over the two far ends in place
        tx, ty = self.theta[x], self.theta[y]
        tx[tx.index((e1, 1 - s1))] = (new, 0)
        ty[ty.index((e2, 1 - s2))] = (new, 1)
        self.edges[new] = (x, y)
        for e in (e1, e2):
            del self.edges[e]
            self.labels.pop(e, None)
        del self.theta[v]
        del self.vertices[v]

    def smoothable(self, v) -> bool:
        ends = self.theta[v]
        if len(ends) != 2 or ends[0][0] == ends[1][0]:
            return False
        x, y = self.far_vertex(ends[0]), self.far_vertex(ends[1])
        return x != y and v not in (x, y)

    def deletable(self, v) -> bool:
        # keep a lone edge: deleting either end would leave an isolated vertex
        ends = self.theta[v]
        return len(ends) == 1 and len(self.theta[self.far_vertex(ends[0])]) > 1


def delete_leaf(R: RotationSystem, v) -> RotationSystem:
    work = _Mutable(R)
    work.delete_leaf(v)
    return work.freeze()


def smooth(R: RotationSystem, v) -> RotationSystem:
    """Remove a degree-two vertex, splicing one edge ``(x, y)`` into the vacated slots."""
    work = _Mutable(R)
    work.smooth(v)
    return work.freeze()


def reduce(R: RotationSystem, only: Iterable | None = None) -> RotationSystem:
    """Apply leaf deletions and smoothings until none applies.

    ``only`` restricts which vertices may be removed.  A component that is a
    single edge is left alone, so faces, edge surplus and the number of
    components are all unchanged.
    """
    work = _Mutable(R)
    eligible = set(work.vertices if only is None else only)
    pending = [v for v in R.vertices if v in eligible]
    while pending:
        changed = []
        for v in pending:
            if v not in work.vertices:
                continue
            touched = {work.far_vertex(end) for end in work.theta[v]}
            if work.deletable(v):
                work.delete_leaf(v)
            elif work.smoothable(v):
                work.smooth(v)
            else:
                continue
            changed.extend(u for u in touched if u in eligible and u in work.vertices)
        pending = list(dict.fromkeys(changed))
    return work.freeze()


# --- named systems ------------------------------------------------------------


def wheeel(m: int) -> RotationSystem:
    """The spinning ``m``-wheeel: an ``m``-wheel plus a second spoke ``P1`` beside ``S1``.

    Vertices are ``"h"`` and ``"r1" .. "r{m-1}"``.  Rim edge ``R^j`` joins
    ``r_j`` to ``r_{j+1}`` (indices mod ``m - 1``), spoke ``S^j`` joins the
    hub to ``r_j``.
    """
    if m < 3:
        raise ValueError("wheeel needs m >= 3")
    k = m - 1
    rim = [f"r{j}" for j in range(1, k + 1)]
    R_ = {j: j - 1 for j in range(1, k + 1)}
    S_ = {j: k + j - 1 for j in range(1, k + 1)}
    P1 = 2 * k
    edges = {}
    labels = {}
    for j in range(1, k + 1):
        edges[R_[j]] = (rim[j - 1], rim[j % k])
        labels[R_[j]] = f"R{j}"
        edges[S_[j]] = ("h", rim[j - 1])
        labels[S_[j]] = f"S{j}"
    edges[P1] = ("h", rim[0])
    labels[P1] = "P1"

    theta = {"h": [(S_[j], 0) for j in range(1, k)] + [(P1, 0), (S_[k], 0)]}
    theta["r1"] = [(S_[1], 1), (R_[1], 0), (P1, 1), (R_[k], 1)]
    for i in range(2, k + 1):
        theta[f"r{i}"] = [(S_[i], 1), (R_[i], 0), (R_[i - 1], 1)]
    return RotationSystem(["h"] + rim, edges, theta, labels)


def random_system(rng: random.Random, max_vertices: int = 12, max_edges: int = 16) -> RotationSystem:
    """Random multigraph with random rotations; loops and parallel edges included."""
    nv = rng.randint(1, max_vertices)
    ne = rng.randint(0, max_edges)
    vertices = list(range(nv))
    edges = {}
    theta: dict[int, list[End]] = {v: [] for v in vertices}
    for e in range(ne):
        a, b = rng.randrange(nv), rng.randrange(nv)
        edges[e] = (a, b)
        theta[a].append((e, 0))
        theta[b].append((e, 1))
    for ends in theta.values():
        rng.shuffle(ends)
    return RotationSystem(vertices, edges, theta)


def subdivide(R: RotationSystem) -> RotationSystem:
    """Put a new degree-two vertex ``("sub", e)`` in the middle of every edge."""
    vertices = list(R.vertices)
    edges = {}
    theta = {v: [] for v in R.vertices}
    nxt = max(R.edges, default=-1) + 1
    renamed = {}
    for e, (a, b) in sorted(R.edges.items()):
        mid = ("sub", e)
        vertices.append(mid)
        first, second = e, nxt
        nxt += 1
        edges[first] = (a, mid)
        edges[second] = (mid, b)
        renamed[(e, 0)] = (first, 0)
        renamed[(e, 1)] = (second, 1)
        theta[mid] = [(first, 1), (second, 0)]
    for v, ends in R.theta.items():
        theta[v] = [renamed[end] for end in ends]
    return RotationSystem(vertices, edges, theta)

"""Incremental generators for the Hamilton path and the Hamilton cycle.

``PathGenerator`` keeps the permutation in an array together with two
counters: ``decs``, the number of positions ``i`` with
``perm[i] == perm[i+1] + 1``, and ``t``, the value the second symbol must
have for the next move to be tau.  ``decs`` only identifies the two special
permutations ``q = n ... 1`` (``decs == n-1``) and ``q sigma``.

``CycleGenerator`` keeps the permutation in a circular singly linked list,
stored as a successor table indexed by symbol, and counts the increments in
``p3 ... pn``: adjacent pairs that are also adjacent in the circular string
``1 2 ... n-1``.  Every step touches a bounded number of links.
"""

from __future__ import annotations

from typing import Iterator

from .perms import Perm, identity, reversed_identity
from .rules import RuleKind, iterate, path_endpoints


def count_decs(p: Perm) -> int:
    return sum(1 for a, b in zip(p, p[1:]) if a == b + 1)


def path_target(p: Perm) -> int | None:
    """Second symbol that makes tau the next move (cover rule applied to ``p tau``)."""
    n = len(p)
    j = p.index(n)
    if j == 1:
        return None
    if j == 0:
        r = p[2]
    elif j == n - 1:
        r = p[0]
    else:
        r = p[j + 1]
    return r % (n - 1) + 1


class PathGenerator:
    """Hamilton path from ``q tau`` to ``q sigma tau`` with ``q = n n-1 ... 1``.

    ``layout="array"`` shifts the whole array on sigma, the plain
    textbook layout; ``layout="ring"`` moves an origin index instead.  Both yield
    the same sequence.  With ``check=True`` the counters are recomputed from
    scratch after every step.
    """

    def __init__(self, n: int, layout: str = "array", check: bool = False):
        if n < 3:
            raise ValueError("path generator requires n >= 3")
        if layout not in ("array", "ring"):
            raise ValueError(f"unknown layout {layout!r}")
        self.n = n
        self.layout = layout
        self.check = check
        self.buf = list(reversed_identity(n))
        self.buf[0], self.buf[1] = self.buf[1], self.buf[0]
        self.origin = 0
        self.decs = n - 3
        self.t = n - 1
        self.visited = 0
        self.ops = 0  # element reads and writes of the most recent step

    def perm(self) -> Perm:
        o = self.origin
        return tuple(self.buf[o:] + self.buf[:o])

    def _at(self, i: int) -> int:
        return self.buf[(self.origin + i) % self.n]

    def _sigma(self) -> None:
        n, buf = self.n, self.buf
        at = self._at
        self.decs -= at(0) == at(1) + 1
        if self.layout == "array":
            first = buf[0]
            for i in range(n - 1):
                buf[i] = buf[i + 1]
            buf[n - 1] = first
            self.ops = 2 * n + 6
        else:
            self.origin = (self.origin + 1) % n
            self.ops = 8
        self.decs += at(n - 2) == at(n - 1) + 1
        if at(n - 1) == n:
            self.t = at(0) % (n - 1) + 1
        elif at(0) == n:
            self.t = at(2) % (n - 1) + 1

    def _tau(self) -> None:
        n = self.n
        at = self._at
        self.decs -= (at(0) == at(1) + 1) + (at(1) == at(2) + 1)
        i, j = self.origin, (self.origin + 1) % n
        self.buf[i], self.buf[j] = self.buf[j], self.buf[i]
        self.decs += (at(0) == at(1) + 1) + (at(1) == at(2) + 1)
        if at(n - 1) == n:
            self.t = at(0) % (n - 1) + 1
        self.ops = 14

    def _verify(self) -> None:
        p = self.perm()
        if self.decs != count_decs(p):
            raise AssertionError(f"decs={self.decs} but {p} has {count_decs(p)}")
        target = path_target(p)
        if target is not None and self.t != target:
            raise AssertionError(f"t={self.t} but {p} needs {target}")

    def __iter__(self) -> Iterator[Perm]:
        n = self.n
        at = self._at
        while True:
            self.visited += 1
            yield self.perm()
            if self.decs == n - 1:
                # at q: leave by sigma, the path skips (q, q tau)
                self._sigma()
            elif at(1) == self.t:
                self._tau()
                if self.decs == n - 2 and at(n - 1) == n:
                    # back at q sigma: the tau edge out of q sigma tau closes the cover cycle
                    return
            else:
                self._sigma()
            if self.check:
                self._verify()


def path_generator(n: int, layout: str = "array", check: bool = False) -> Iterator[Perm]:
    return iter(PathGenerator(n, layout, check))


class _CountingList(list):
    """List that counts element reads and writes."""

    def __init__(self, data):
        super().__init__(data)
        self.touches = 0

    def __getitem__(self, i):
        self.touches += 1
        return list.__getitem__(self, i)

    def __setitem__(self, i, v):
        self.touches += 1
        list.__setitem__(self, i, v)


def count_incs(p: Perm) -> int:
    """Adjacent pairs in ``p3 ... pn`` that are consecutive in the circular ``1 ... n-1``."""
    n = len(p)
    return sum(1 for a, b in zip(p[2:], p[3:]) if a < n and a % (n - 1) + 1 == b)


class CycleGenerator:
    """Loopless Hamilton cycle for odd ``n >= 5``, starting at ``1 2 ... n``.

    ``instrument=True`` counts link reads and writes per step in
    ``step_ops``; ``check=True`` recomputes ``incs`` and the list shape after
    every step.
    """

    def __init__(self, n: int, instrument: bool = False, check: bool = False):
        if n < 5 or n % 2 == 0:
            raise ValueError("cycle generator requires odd n >= 5")
        self.n = n
        self.check = check
        nxt = [0] * (n + 1)
        for v in range(1, n):
            nxt[v] = v + 1
        nxt[n] = 1
        self.nxt = _CountingList(nxt) if instrument else nxt
        self.head = 1
        self.tail = n
        self.incs = n - 4
        self.step_ops: list[int] = []
        self.tau_steps = 0

    def perm(self) -> Perm:
        nxt = list.__getitem__
        out = [self.head]
        v = nxt(self.nxt, self.head)
        while v != self.head:
            out.append(v)
            v = nxt(self.nxt, v)
        return tuple(out)

    def _sigma(self) -> None:
        N, nxt = self.n, self.nxt
        # pair (p_N, p_1) enters the window p3..pN, pair (p3, p4) leaves it
        tail, head = self.tail, self.head
        if tail != N and tail % (N - 1) + 1 == head:
            self.incs += 1
        self.tail = head
        self.head = head = nxt[head]
        a = nxt[head]
        if a != N and a % (N - 1) + 1 == nxt[a]:
            self.incs -= 1

    def _tau(self) -> None:
        nxt = self.nxt
        second = nxt[self.head]
        nxt[self.head] = nxt[second]
        nxt[second] = self.head
        self.head = second
        nxt[self.tail] = second

    def _verify(self) -> None:
        p = self.perm()
        if len(p) != self.n:
            raise AssertionError(f"linked list has {len(p)} nodes, expected {self.n}")
        if p[-1] != self.tail:
            raise AssertionError("tail pointer is stale")
        if self.incs != count_incs(p):
            raise AssertionError(f"incs={self.incs} but {p} has {count_incs(p)}")

    def __iter__(self) -> Iterator[Perm]:
        N = self.n
        nxt = self.nxt
        instrumented = isinstance(nxt, _CountingList)
        yield self.perm()
        while self.incs < N - 3 or nxt[self.head] != 1:
            if instrumented:
                nxt.touches = 0
            head = self.head
            # m is the symbol after N, skipping the first position
            m = nxt[nxt[N]] if head == N else nxt[N]
            second = nxt[head]
            if second == (m - 1) % (N - 2) + 2 or (second == N and self.incs == N - 3):
                self._tau()
                self.tau_steps += 1
            else:
                self._sigma()
            if instrumented:
                self.step_ops.append(nxt.touches)
            if self.check:
                self._verify()
            yield self.perm()


def cycle_generator(n: int, instrument: bool = False, check: bool = False) -> Iterator[Perm]:
    return iter(CycleGenerator(n, instrument, check))


def generic_iterator(n: int, kind: RuleKind | str, start: Perm | None = None) -> Iterator[Perm]:
    """Successor-rule iteration, ``O(n)`` per step; the oracle for the fast engines."""
    return iterate(n, kind, start)


def moves(seq) -> Iterator[str]:
    """``'s'``/``'t'`` letters between consecutive permutations."""
    it = iter(seq)
    try:
        prev = next(it)
    except StopIteration:
        return
    for p in it:
        yield move_between(prev, p)
        prev = p


def move_between(a: Perm, b: Perm) -> str:
    if b == a[1:] + a[:1]:
        return "s"
    if b == (a[1], a[0]) + a[2:]:
        return "t"
    raise ValueError(f"{b} is not one sigma or tau step from {a}")


__all__ = [
    "CycleGenerator",
    "PathGenerator",
    "count_decs",
    "count_incs",
    "cycle_generator",
    "generic_iterator",
    "identity",
    "move_between",
    "moves",
    "path_endpoints",
    "path_generator",
    "path_target",
]

"""Permutation strings, the sigma/tau actions and rotation classes.

Permutations are plain tuples of the symbols ``1..n``.  Position ``0`` holds
the first symbol, so the one-line string ``p1 p2 ... pn`` is stored as
``(p[0], p[1], ..., p[n-1])``.  ``sigma`` rotates left by one position and
``tau`` swaps the first two positions; words are applied left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, NamedTuple, Sequence

MAX_N = 16

Perm = tuple[int, ...]

SIGMA = "sigma"
SIGMA_INV = "sigma_inv"
TAU = "tau"

_WORD_LETTERS = {"s": SIGMA, "r": SIGMA_INV, "t": TAU}


def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(p)
    n = len(p)
    if n > MAX_N:
        raise ValueError(f"n={n} exceeds the supported maximum {MAX_N}")
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"{p!r} is not a permutation of 1..{n}")
    return p


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def reversed_identity(n: int) -> Perm:
    """``q = n n-1 ... 1``, the anchor of the Hamilton path."""
    return tuple(range(n, 0, -1))


def apply_sigma(p: Perm) -> Perm:
    return p[1:] + p[:1]


def apply_sigma_inv(p: Perm) -> Perm:
    return p[-1:] + p[:-1]


def apply_tau(p: Perm) -> Perm:
    return (p[1], p[0]) + p[2:]


_ACTIONS = {SIGMA: apply_sigma, SIGMA_INV: apply_sigma_inv, TAU: apply_tau}


def parse_word(word: str | Iterable[str]) -> list[str]:
    """Accept ``"tst"``-style strings or sequences of generator names."""
    if isinstance(word, str):
        try:
            return [_WORD_LETTERS[c] for c in word if not c.isspace()]
        except KeyError as exc:
            raise ValueError(f"unknown generator letter {exc.args[0]!r}") from None
    out = list(word)
    for g in out:
        if g not in _ACTIONS:
            raise ValueError(f"unknown generator {g!r}")
    return out


def apply_word(p: Perm, word) -> Perm:
    for g in parse_word(word):
        p = _ACTIONS[g](p)
    return p


class LabeledEdge(NamedTuple):
    """A directed edge of the sigma-tau graph.

    ``label`` is ``"sigma"`` or ``"tau"``; a sigma edge always points from
    ``p`` to ``p sigma`` even when a walk traverses it backwards.
    """

    tail: Perm
    head: Perm
    label: str


def sigma_edge(p: Perm) -> LabeledEdge:
    return LabeledEdge(p, apply_sigma(p), SIGMA)


def tau_edge(p: Perm) -> LabeledEdge:
    return LabeledEdge(p, apply_tau(p), TAU)


def walk(p: Perm, word) -> list[Perm]:
    """Vertices ``p, p a1, p a1 a2, ...`` visited by a word."""
    out = [p]
    for g in parse_word(word):
        p = _ACTIONS[g](p)
        out.append(p)
    return out


def walk_edges(p: Perm, word) -> frozenset[LabeledEdge]:
    """The graph edges traversed by ``word`` starting at ``p``.

    A ``sigma_inv`` step from ``u`` to ``u sigma^-1`` uses the sigma edge
    ``(u sigma^-1, u)``.
    """
    edges = set()
    for g in parse_word(word):
        if g == SIGMA:
            nxt = apply_sigma(p)
            edges.add(LabeledEdge(p, nxt, SIGMA))
        elif g == TAU:
            nxt = apply_tau(p)
            edges.add(LabeledEdge(p, nxt, TAU))
        else:
            nxt = apply_sigma_inv(p)
            edges.add(LabeledEdge(nxt, p, SIGMA))
        p = nxt
    return frozenset(edges)


def least_rotation(s: Sequence[int]) -> tuple[int, ...]:
    # symbols are distinct, so the least rotation starts at the least symbol
    s = tuple(s)
    if not s:
        return s
    k = s.index(min(s))
    return s[k:] + s[:k]


@dataclass(frozen=True, order=True)
class RotClass:
    """Rotation class of a string over ``1..n``.

    ``rep`` is the lexicographically least rotation.  A class whose ``rep``
    has length ``n`` is a full class; length ``n - 1`` means one symbol is
    missing.
    """

    rep: tuple[int, ...]
    n: int

    @property
    def is_full(self) -> bool:
        return len(self.rep) == self.n

    @property
    def missing(self) -> int | None:
        if self.is_full:
            return None
        return (self.n * (self.n + 1)) // 2 - sum(self.rep)

    def rotation_starting_with(self, symbol: int) -> tuple[int, ...]:
        k = self.rep.index(symbol)
        return self.rep[k:] + self.rep[:k]

    def __str__(self) -> str:
        return "[" + format_symbols(self.rep, compact=self.n <= 9) + "]"


def canonical(s: Sequence[int], n: int | None = None) -> RotClass:
    """Rotation class of ``s``.

    ``n`` defaults to ``max(s)`` which is right unless ``n`` itself is the
    missing symbol; pass it explicitly in that case.
    """
    s = tuple(s)
    if len(set(s)) != len(s):
        raise ValueError(f"{s!r} has repeated symbols")
    if n is None:
        n = max(s) if len(s) and max(s) > len(s) else len(s)
    if len(s) not in (n, n - 1) or any(not 1 <= x <= n for x in s):
        raise ValueError(f"{s!r} is not a full or missing-one string over 1..{n}")
    return RotClass(least_rotation(s), n)


def consistent(x: RotClass, y: RotClass) -> bool:
    """True when deleting ``y``'s missing symbol from ``x`` leaves ``y``'s circular order."""
    if not x.is_full or y.is_full or x.n != y.n:
        raise ValueError("consistent() expects a full class and a missing-one class of the same order")
    rotated = x.rotation_starting_with(y.missing)
    return least_rotation(rotated[1:]) == y.rep


def full_classes(n: int) -> list[RotClass]:
    """All ``(n-1)!`` classes of ``P(n)/~`` in sorted order."""
    from itertools import permutations

    return [RotClass((1,) + rest, n) for rest in permutations(range(2, n + 1))]


def missing_classes(n: int, m: int | None = None) -> list[RotClass]:
    """Classes of ``M(n)/~`` (or ``M^m(n)/~`` when ``m`` is given), sorted."""
    from itertools import permutations

    out = []
    for miss in ([m] if m is not None else range(1, n + 1)):
        symbols = [x for x in range(1, n + 1) if x != miss]
        first, rest = symbols[0], symbols[1:]
        out.extend(RotClass((first,) + tail, n) for tail in permutations(rest))
    return sorted(out)


def all_perms(n: int) -> list[Perm]:
    from itertools import permutations

    return list(permutations(range(1, n + 1)))


def format_symbols(p: Sequence[int], compact: bool = False) -> str:
    if compact:
        if len(p) and max(p) > 9:
            raise ValueError("compact form needs symbols below 10")
        return "".join(map(str, p))
    return " ".join(map(str, p))


def format_perm(p: Perm, compact: bool = False) -> str:
    return format_symbols(p, compact)


def parse_perm(text: str) -> Perm:
    """Parse ``"2 4 1 3"`` or, for n <= 9, the compact ``"2413"``."""
    text = text.strip()
    if " " in text or "," in text:
        p = tuple(int(t) for t in text.replace(",", " ").split())
    else:
        if len(text) > 9:
            raise ValueError("compact form is limited to n <= 9; separate symbols with spaces")
        p = tuple(int(c) for c in text)
    return check_perm(p)


def lehmer_rank(p: Sequence[int]) -> int:
    """Rank of ``p`` among the permutations of ``1..n`` in lexicographic order."""
    n = len(p)
    rank = 0
    used = 0
    for i, v in enumerate(p):
        smaller_unused = (v - 1) - (used & ((1 << v) - 1)).bit_count()
        rank = rank * (n - i) + smaller_unused
        used |= 1 << v
    return rank


def lehmer_unrank(rank: int, n: int) -> Perm:
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} out of range for n={n}")
    digits = []
    for base in range(1, n + 1):
        rank, d = divmod(rank, base)
        digits.append(d)
    pool = list(range(1, n + 1))
    return tuple(pool.pop(d) for d in reversed(digits))


class VisitedSet:
    """Flat bit vector over the ``n!`` permutations, indexed by Lehmer rank."""

    def __init__(self, n: int):
        self.n = n
        self.bits = bytearray((factorial(n) + 7) // 8)
        self.count = 0

    def add(self, p: Perm) -> bool:
        """Mark ``p``; returns False if it was already marked."""
        r = lehmer_rank(p)
        byte, bit = r >> 3, 1 << (r & 7)
        if self.bits[byte] & bit:
            return False
        self.bits[byte] |= bit
        self.count += 1
        return True

    def __contains__(self, p: Perm) -> bool:
        r = lehmer_rank(p)
        return bool(self.bits[r >> 3] & (1 << (r & 7)))

    def __len__(self) -> int:
        return self.count

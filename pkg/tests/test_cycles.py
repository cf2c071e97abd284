import itertools
import random
from math import factorial

import pytest

from oracles import alternating_cycle_edges, cover_successors, cycle_lengths
from sigmatau.cycles import (
    CycleCover,
    alt_cycle,
    alt_cycle_start,
    chain_length_cover,
    chain_length_cycle,
    cover_from_family,
    cover_from_family_fast,
    fix_subset,
    hub_class,
    parent_cover,
    parent_cycle,
    rim_cover,
    rim_cycle,
    sigma_cycle,
    sigma_edges,
    sink,
    y_cover_family,
    y_cycle_family,
)
from sigmatau.perms import (
    TAU,
    LabeledEdge,
    apply_sigma,
    apply_tau,
    canonical,
    consistent,
    full_classes,
    missing_classes,
    walk_edges,
)


def P(s):
    return tuple(int(c) for c in s)


def C(s, n=None):
    return canonical(P(s), n)


def reps(classes):
    return {c.rep for c in classes}


def test_sigma_cycle_examples():
    assert sigma_cycle(C("4123")) == walk_edges(P("4123"), "ssss")
    assert len(sigma_cycle(C("123"))) == 3
    assert sigma_cycle(C("2341")) == sigma_cycle(C("4123"))
    with pytest.raises(ValueError):
        sigma_cycle(C("134", 4))


def test_alt_cycle_413():
    y = C("413", 4)
    assert alt_cycle_start(y) == P("1234")
    assert alt_cycle(y) == walk_edges(P("4213"), "tr" * 3)


def test_alt_cycle_tau_edges_move_missing_symbol_forward():
    for e in alt_cycle(C("413", 4)):
        if e.label == TAU:
            assert e.tail[1] == 2 and e.head[0] == 2


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_alt_cycle_length_and_oracle(n):
    for y in missing_classes(n):
        edges = alt_cycle(y)
        assert len(edges) == 2 * n - 2
        assert {(e.tail, e.head) for e in edges} == alternating_cycle_edges(y.rep, n)


@pytest.mark.parametrize("x, y, want", [("4123", "413", "2341"), ("123", "23", "123")])
def test_sink_examples(x, y, want):
    assert sink(C(x), C(y, len(x))) == P(want)


def test_sink_lies_on_both_cycles():
    for x in full_classes(4):
        for y in missing_classes(4):
            if not consistent(x, y):
                with pytest.raises(ValueError):
                    sink(x, y)
                continue
            s = sink(x, y)
            shared = {e for e in sigma_cycle(x) & alt_cycle(y)}
            assert len(shared) == 1
            assert next(iter(shared)).head == s


def test_fix_subset_examples():
    assert reps(fix_subset(5, 1, 2)) == {C("5134").rep, C("5143").rep}
    assert fix_subset(4, 1, 2) == {C("413", 4)}
    with pytest.raises(ValueError):
        fix_subset(5, 2, 2)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_fix_subset_size(n):
    for r in range(1, n):
        for m in range(1, n):
            if r != m:
                assert len(fix_subset(n, r, m)) == factorial(n - 3)


def test_family_listings_n5():
    cyc = {"5143", "5134", "5241", "5214", "5321", "5312", "5431", "5413", "1234"}
    cov = {"5143", "5134", "5241", "5214", "5321", "5312", "5432", "5423"}
    assert y_cycle_family(5) == {C(s, 5) for s in cyc}
    assert y_cover_family(5) == {C(s, 5) for s in cov}


def test_family_listings_n4():
    assert y_cover_family(4) == {C("413", 4), C("421", 4), C("432", 4)}
    # r = 3 pairs with 2 in the cycle family, so [431] replaces [432]
    assert y_cycle_family(4) == {C("413", 4), C("421", 4), C("431", 4), C("123", 4)}


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_family_sizes(n):
    assert len(y_cycle_family(n)) == (n - 1) * factorial(n - 3) + 1
    assert len(y_cover_family(n)) == (n - 1) * factorial(n - 3)
    assert hub_class(n) in y_cycle_family(n)


def test_family_requires_n4():
    with pytest.raises(ValueError):
        y_cover_family(3)


def test_cover_from_empty_family_is_sigma_cover():
    c = cover_from_family(4, ())
    assert c.size() == 6
    assert c.cycle_lengths() == [4] * 6
    assert c.tau_edge_count() == 0
    assert c.edges() == sigma_edges(4)


def test_cover_sizes_known_values():
    assert cover_from_family(4, y_cover_family(4)).size() == 2
    assert cover_from_family(5, y_cycle_family(5)).size() == 1
    assert cover_from_family(4, y_cover_family(4)).tau_edge_count() == 9
    assert cover_from_family(5, y_cycle_family(5)).tau_edge_count() == 36


@pytest.mark.parametrize("n", [4, 5])
def test_random_families_match_oracle(n):
    rng = random.Random(n)
    M = missing_classes(n)
    for _ in range(25):
        ys = [y for y in M if rng.random() < 0.4]
        c = cover_from_family(n, ys)
        succ = cover_successors(n, [y.rep for y in ys])
        assert c.cycle_lengths() == cycle_lengths(succ)
        assert {p: e.head for p, e in c.succ.items()} == succ
        assert cover_from_family_fast(n, ys) == c
        assert c.tau_edge_count() == (n - 1) * len(ys)


def test_cover_from_edges_rejects_bad_degrees():
    edges = set(sigma_edges(3))
    extra = LabeledEdge(P("123"), apply_tau(P("123")), TAU)
    with pytest.raises(ValueError):
        CycleCover.from_edges(3, edges | {extra})
    with pytest.raises(ValueError):
        CycleCover.from_edges(3, set(list(edges)[1:]))


def test_cover_from_family_rejects_full_class():
    with pytest.raises(ValueError):
        cover_from_family(3, [C("123")])


def test_cycles_start_at_least_vertex():
    c = cover_from_family(4, y_cover_family(4))
    for cyc in c.cycles():
        assert cyc[0] == min(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert c.succ[a].head == b
    assert c.cycle_lengths() == [6, 18]


def test_parent_on_the_cover_rim():
    # [6 5 4 3 2] -> [6 1 5 4 3]
    assert parent_cover(C("65432", 6)) == C("61543", 6)
    rim = rim_cover(6)
    assert rim[0] == C("65432", 6) and rim[1] == C("61543", 6)


def test_parent_on_the_cycle_rim():
    # [6 5 4 3 1] -> [6 2 5 4 1]
    assert parent_cycle(C("65431", 6)) == C("62541", 6)
    assert rim_cycle(6)[:2] == [C("65431", 6), C("62541", 6)]


def test_parent_errors():
    with pytest.raises(ValueError):
        parent_cycle(hub_class(5))
    outsider = next(y for y in missing_classes(5) if y not in y_cover_family(5))
    with pytest.raises(ValueError):
        parent_cover(outsider)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_parent_walks_reach_the_rim_and_chain_length_grows(n):
    for family, parent, rim, ell in (
        (y_cover_family(n), parent_cover, set(rim_cover(n)), chain_length_cover),
        (y_cycle_family(n) - {hub_class(n)}, parent_cycle, set(rim_cycle(n)), chain_length_cycle),
    ):
        for y in family:
            assert parent(y) in family
            if y not in rim:
                assert ell(parent(y)) > ell(y)
            z = y
            for _ in range(len(family)):
                if z in rim:
                    break
                z = parent(z)
            assert z in rim


@pytest.mark.parametrize("n", [4, 5, 6])
def test_every_two_alt_cycles_share_no_edge(n):
    fam = sorted(y_cover_family(n))
    for a, b in itertools.combinations(fam, 2):
        assert not (alt_cycle(a) & alt_cycle(b))


def test_sigma_edges_all_sigma():
    assert all(e.head == apply_sigma(e.tail) for e in sigma_edges(4))


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_rim_is_exactly_the_maximal_chain_length(n):
    rim_c = set(rim_cover(n))
    for y in y_cover_family(n):
        assert (chain_length_cover(y) == n - 2) == (y in rim_c)
    rim_r = set(rim_cycle(n))
    for y in y_cycle_family(n) - {hub_class(n)}:
        assert (chain_length_cycle(y) == n - 3) == (y in rim_r)
    assert len(rim_c) == n - 1 and len(rim_r) == n - 2

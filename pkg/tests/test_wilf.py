import random
from math import factorial

import pytest

from oracles import consistent as consistent_brute, cover_successors, cycle_lengths, face_orbits
from sigmatau.cycles import cover_from_family, y_cover_family, y_cycle_family
from sigmatau.perms import TAU, canonical, full_classes, missing_classes
from sigmatau.rotation import components, edge_surplus, face_count, faces
from sigmatau.wilf import (
    cover_cycles_from_faces,
    face_count_vs_cover,
    face_to_cover_cycle,
    face_word,
    faces_plus_isolated,
    wilf,
    wilf_induced,
    wilf_on,
    wilf_reduced,
)


def C(s, n=None):
    return canonical(tuple(int(c) for c in s), n)


def test_wilf4_counts():
    W = wilf(4)
    assert len(W.vertices) == 14
    assert len(W.edges) == 24


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_wilf_degrees_and_edges_are_consistent_pairs(n):
    W = wilf(n)
    for v in W.vertices:
        assert W.degree(v) == (n if v.is_full else n - 1)
    for a, b in W.edges.values():
        assert consistent_brute(a.rep, b.rep)
    assert len(W.edges) == factorial(n)


def test_wilf_rotation_at_missing_class_ends_after_q1():
    W = wilf(4)
    y = C("134", 4)  # missing 2
    last_end = W.theta[y][-1]
    x = W.edges[last_end[0]][0]
    assert x == C("1234")  # insert 2 right after q1 = 1
    first_end = W.theta[y][0]
    assert W.edges[first_end[0]][0] == C("1342")  # rightmost gap


def test_wilf_rotation_at_full_class_deletes_in_order():
    W = wilf(4)
    x = C("1243")
    got = [W.edges[e][1] for e, _ in W.theta[x]]
    assert got == [C("243", 4), C("143", 4), C("123", 4), C("124", 4)]


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_face_counts_of_the_two_families(n):
    cover = wilf_induced(n, "cover")
    assert face_count(cover) == 2
    cyc = wilf_induced(n, "cycle")
    want = {4: 4, 5: 1, 6: 2, 7: 1}[n]
    assert face_count(cyc) == want
    assert face_orbits(cyc.vertices, cyc.edges, cyc.theta) == want


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_surpluses(n):
    assert edge_surplus(wilf_induced(n, "cycle")) == n - 1
    assert edge_surplus(wilf_induced(n, "cover")) == 1


@pytest.mark.parametrize("n", [4, 5, 6])
def test_cover_system_connected(n):
    assert components(wilf_induced(n, "cover")) == 1


def test_induced_on_cover_family_n4():
    R = wilf_on(4, {C("413", 4), C("421", 4), C("432", 4)})
    assert len(R.vertices) == 6 + 3
    assert len(R.edges) == 9
    assert face_count(R) == 2


@pytest.mark.parametrize("n, kind", [(4, "cover"), (5, "cover"), (6, "cover"), (5, "cycle"), (6, "cycle"), (7, "cycle")])
def test_reduction_removes_all_full_classes(n, kind):
    R = wilf_induced(n, kind)
    out = wilf_reduced(n, kind)
    assert all(not v.is_full for v in out.vertices)
    assert face_count(out) == face_count(R)
    assert edge_surplus(out) == edge_surplus(R)
    assert components(out) == components(R)


def test_reduced_cover_n4_shape():
    out = wilf_reduced(4, "cover")
    assert len(out.vertices) == 3
    assert len(out.edges) == 3


def test_reduction_fails_for_cycle_family_at_n4():
    with pytest.raises(ValueError, match="survived"):
        wilf_reduced(4, "cycle")


def test_face_lemma_empty_and_cover_family():
    assert face_count_vs_cover(4, ()) == (6, 6)
    assert face_count_vs_cover(4, y_cover_family(4)) == (2, 2)


@pytest.mark.parametrize("n", [4, 5])
def test_face_lemma_random(n):
    rng = random.Random(100 + n)
    M = missing_classes(n)
    for _ in range(40):
        ys = {y for y in M if rng.random() < 0.5}
        faces_side = faces_plus_isolated(wilf_on(n, ys))
        oracle = len(cycle_lengths(cover_successors(n, [y.rep for y in ys])))
        assert faces_side == oracle


def test_face_word_skip_and_cover4_cycles():
    n = 4
    R = wilf_induced(n, "cover")
    cycles = sorted(len(c) for c in cover_cycles_from_faces(n, y_cover_family(n)))
    assert cycles == [6, 18]
    cover = cover_from_family(n, y_cover_family(n))
    cover_cycles = set()
    for cyc in cover.cycles():
        cover_cycles.add(frozenset(cover.succ[p] for p in cyc))
    assert set(cover_cycles_from_faces(n, y_cover_family(n))) == cover_cycles
    for f in faces(R):
        start, word = face_word(n, R, f)
        y_visits = sum(1 for d in f if not R.dart_tail(d).is_full)
        assert word.count("t") == y_visits
        edges = face_to_cover_cycle(n, R, f)
        assert sum(1 for e in edges if e.label == TAU) == y_visits


@pytest.mark.parametrize("n", [4, 5])
def test_faces_map_onto_cover_cycles_random(n):
    rng = random.Random(n)
    M = missing_classes(n)
    for _ in range(20):
        ys = {y for y in M if rng.random() < 0.5}
        cover = cover_from_family(n, ys)
        want = {frozenset(cover.succ[p] for p in cyc) for cyc in cover.cycles()}
        got = cover_cycles_from_faces(n, ys)
        assert len(got) == len(want)
        assert set(got) == want


def test_every_full_class_meets_n_alternating_cycles():
    n = 4
    M = missing_classes(n)
    for x in full_classes(n):
        assert sum(consistent_brute(x.rep, y.rep) for y in M) == n

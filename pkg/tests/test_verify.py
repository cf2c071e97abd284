import pytest

from oracles import count_hamilton_cycles as oracle_hamilton
from sigmatau.verify import (
    CHECKS,
    Report,
    applicable,
    count_hamilton_cycles,
    find_hamilton_path,
    minimality_table,
    run_check,
    run_checks,
    verify_cover,
    verify_face_lemma,
    verify_hamilton_cycle,
    verify_minimality,
    verify_no_hamilton_even,
    verify_path,
    verify_rule_family_equivalence,
)
from sigmatau.rules import path_endpoints


def test_report_line():
    assert Report("x", 5, True, "ok").line() == "CHECK x n=5 PASS ok"
    assert str(Report("x", 4, False)) == "CHECK x n=4 FAIL"


@pytest.mark.parametrize("n, count", [(5, 120), (7, 5040)])
def test_hamilton_cycle(n, count):
    r = verify_hamilton_cycle(n)
    assert r.ok and r.data["visited"] == count
    assert r.data["tau_edges"] == {5: 36, 7: 870}[n]


def test_hamilton_cycle_n3_reports_early_closure():
    r = verify_hamilton_cycle(3)
    assert not r.ok and "closed early" in r.details


def test_hamilton_cycle_domain():
    with pytest.raises(ValueError):
        verify_hamilton_cycle(4)


@pytest.mark.parametrize("n, lengths", [(4, [6, 18]), (5, [8, 112]), (6, [10, 710])])
def test_cover(n, lengths):
    r = verify_cover(n)
    assert r.ok and sorted(r.data["lengths"]) == lengths


@pytest.mark.parametrize("n", [3, 5, 8])
def test_path(n):
    r = verify_path(n)
    assert r.ok
    assert (r.data["first"], r.data["last"]) == path_endpoints(n)


def test_rule_equivalence():
    r = verify_rule_family_equivalence(5)
    assert r.ok and "120 entering edges" in r.details


def test_face_lemma_seeded():
    a = verify_face_lemma(4, trials=20, seed=3)
    b = verify_face_lemma(4, trials=20, seed=3)
    assert a.ok and a.line() == b.line()


def test_hamilton_search_against_oracle():
    assert count_hamilton_cycles(3) == oracle_hamilton(3) == 3
    assert count_hamilton_cycles(4) == oracle_hamilton(4) == 0


def test_no_even_hamilton():
    r = verify_no_hamilton_even(4)
    assert r.ok and r.data["cycles"] == 0 and r.data["path_found"] and r.data["n3_cycles"] > 0


def test_find_hamilton_path():
    a, b = path_endpoints(4)
    path = find_hamilton_path(4, a, b)
    assert path[0] == a and path[-1] == b and len(set(path)) == 24


def test_minimality_table_n4():
    t = minimality_table(4)
    assert t[0] == [6]
    assert min(t[1]) == 4
    assert min(t[2]) == 2
    assert min(t[3]) == 2
    assert all(1 not in sizes for sizes in t.values())


def test_minimality_n4_reports_the_counterexample():
    r = verify_minimality(4)
    assert not r.ok
    assert not r.data["bound_violations"] and not r.data["unifacial"]
    assert len(r.data["size_two_or_less"]) == 16
    assert "counterexample" in r.details


def test_minimality_n5_is_report_only():
    assert verify_minimality(5).ok


def test_registry_domains():
    assert applicable("hamilton-cycle", 9) and not applicable("hamilton-cycle", 8)
    assert applicable("no-even-hamilton", 4) and not applicable("no-even-hamilton", 6)
    with pytest.raises(ValueError):
        run_check("minimality", 7)
    reports = run_checks(["path", "cover"], [3, 4])
    assert [r.name for r in reports] == ["path", "path", "cover"]
    assert set(CHECKS) >= {"hamilton-cycle", "cover", "path", "face-lemma", "minimality"}

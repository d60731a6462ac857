import itertools
import json

import numpy as np
import pytest

from coxtile import (CoxeterGroup, ParabolicError, bruhat_leq, core_free_check, decompose,
                     enumerate_min_reps, project)
from coxtile.parabolic import is_min_rep


def _subgroup(group, J):
    """W_J by closure under right multiplication by J."""
    seen = {group.identity().key(): group.identity()}
    frontier = [group.identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for j in J:
                y = x * group.generator(j)
                if y.key() not in seen:
                    seen[y.key()] = y
                    nxt.append(y)
        frontier = nxt
    return list(seen.values())


def _brute_min_reps(group, J):
    WJ = _subgroup(group, J)
    reps = {}
    for w in group.elements():
        best = min((a * w for a in WJ), key=lambda x: (x.length(), x.key()))
        reps[best.key()] = best
    return reps


def _proper_subsets(n):
    for k in range(n):
        yield from itertools.combinations(range(1, n + 1), k)


@pytest.mark.parametrize("name", ["A3", "B3", "A1xA2"])
def test_min_reps_match_brute_force(name):
    g = CoxeterGroup(name)
    for J in _proper_subsets(g.rank):
        cosets = enumerate_min_reps(g, J)
        brute = _brute_min_reps(g, J)
        assert {u.key() for u in cosets.reps} == set(brute)
        assert cosets.m == g.order() // g.parabolic_order(J)
        # unique minimum per coset: the brute-force minimum has no strict tie
        for u in cosets.reps:
            assert is_min_rep(u, J)


def test_d5_quotient():
    g = CoxeterGroup("D5")
    cosets = enumerate_min_reps(g, [1, 2, 3, 4])
    assert cosets.m == 10
    expected = [[], [5], [5, 4], [5, 4, 3], [5, 4, 3, 2], [5, 4, 3, 1], [5, 4, 3, 1, 2],
                [5, 4, 3, 1, 2, 3], [5, 4, 3, 1, 2, 3, 4], [5, 4, 3, 1, 2, 3, 4, 5]]
    assert {u.key() for u in cosets.reps} == {g.word_to_element(w).key() for w in expected}
    assert cosets.reps[0].is_identity()
    data = json.loads(cosets.to_json())
    assert data["m"] == 10 and len(data["action"]) == 5


def test_a2xa3_quotient():
    g = CoxeterGroup("A2xA3")
    cosets = enumerate_min_reps(g, [1, 3, 4])
    assert cosets.m == 12


def test_action_is_involutive_and_consistent():
    g = CoxeterGroup("B3")
    for J in _proper_subsets(3):
        cosets = enumerate_min_reps(g, J)
        for s in range(1, 4):
            row = cosets.action[s - 1]
            assert np.array_equal(row[row], np.arange(cosets.m))
            for i, u in enumerate(cosets.reps):
                assert cosets.position(u * g.generator(s)) == row[i]
        for w in g.elements()[:20]:
            word = w.reduced_word()
            assert cosets.act(0, word) == cosets.position(w)


def test_nested_reps():
    g = CoxeterGroup("A3")
    for J in _proper_subsets(3):
        big = {u.key() for u in enumerate_min_reps(g, J).reps}
        for k in range(len(J)):
            for I in itertools.combinations(J, k):
                small = {u.key() for u in enumerate_min_reps(g, I).reps}
                assert big <= small


def test_full_J_rejected():
    g = CoxeterGroup("A2")
    with pytest.raises(ParabolicError):
        enumerate_min_reps(g, [1, 2])
    with pytest.raises(ValueError):
        enumerate_min_reps(g, [3])


@pytest.mark.parametrize("name", ["A3", "B3"])
def test_projection_monotone(name):
    g = CoxeterGroup(name)
    els = g.elements()
    for J in _proper_subsets(g.rank):
        proj = [project(w, J) for w in els]
        for i, j in itertools.product(range(len(els)), repeat=2):
            if bruhat_leq(els[i], els[j]):
                assert bruhat_leq(proj[i], proj[j])


def test_project_example():
    g = CoxeterGroup("D5")
    w = g.word_to_element([1, 5, 4, 3])
    u = project(w, [1, 2, 3, 4])
    assert u == g.word_to_element([5, 4, 3])
    WJ = _subgroup(g, [1, 2, 3, 4])
    assert len(WJ) == 192
    assert min((a * w).length() for a in WJ) == u.length()


def test_decompose():
    g = CoxeterGroup("B3")
    for J in _proper_subsets(3):
        for w in g.elements():
            a, u = decompose(w, J)
            assert a * u == w
            assert a.length() + u.length() == w.length()
            assert set(a.reduced_word()) <= set(J)
            assert is_min_rep(u, J)


def test_core_free():
    assert core_free_check(CoxeterGroup("D5"), [1, 2, 3, 4]).faithful
    res = core_free_check(CoxeterGroup("A1xA1"), [1])
    assert not res and res.witness is not None
    assert res.witness.reduced_word() == [1]
    assert core_free_check(CoxeterGroup("A2"), []).faithful
    assert core_free_check(CoxeterGroup("A2xA3"), [1, 3, 4]).faithful
    assert core_free_check(CoxeterGroup("B2"), [1]).faithful
    # a whole factor of a product acts trivially on its own cosets
    res = core_free_check(CoxeterGroup("A1xA2"), [2, 3])
    assert not res and set(res.witness.reduced_word()) <= {2, 3}
    sampled = core_free_check(CoxeterGroup("E8"), range(1, 8), mode="sampled", samples=50)
    assert sampled.faithful and sampled.mode == "sampled"
    with pytest.raises(ValueError):
        core_free_check(CoxeterGroup("A2"), [1], mode="guess")

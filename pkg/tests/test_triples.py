import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ap3lattice.errors import BudgetExceeded, DomainError
from ap3lattice.triples import (
    Realization, Triple, TripleSystem, all_triples, count_valid, enumerate_valid, is_consistent,
    is_valid, max_valid_stats, propp_inverse, propp_map, realize, valid_size_histogram,
)


def test_triple_validation():
    assert str(Triple(1, 2, 3, 4)) == "1,2,3"
    for bad in [(2, 2, 3), (3, 2, 1), (0, 1, 2), (1, 2, 5)]:
        with pytest.raises(DomainError):
            Triple(*bad, 4)


def test_system_parse_and_json_round_trip():
    s = TripleSystem.parse("1,3,4; 1,2,3", 4)
    assert str(s) == "1,2,3;1,3,4"
    assert TripleSystem.from_json(json.dumps(s.to_json())) == s
    assert TripleSystem.parse("", 4) == TripleSystem(4)
    assert Triple(1, 2, 3, 4) in s and len(s) == 2


def test_consistency_examples():
    t = lambda *p: Triple(*p, 4)  # noqa: E731
    assert not is_consistent(t(1, 2, 3), t(1, 2, 4))
    assert is_consistent(t(1, 2, 3), t(1, 3, 4))
    assert is_consistent(t(1, 2, 3), t(1, 2, 3))
    with pytest.raises(DomainError):
        is_consistent(Triple(1, 2, 3, 4), Triple(1, 2, 3, 5))


def test_realize_examples():
    assert str(realize(TripleSystem.of(4, (1, 2, 3), (1, 3, 4)))) == "1 2 3 5"
    assert realize(TripleSystem.of(4, (1, 2, 3), (1, 2, 4))) is None
    assert realize(TripleSystem(1)).x == (1,)


def test_realization_requires_increase():
    with pytest.raises(DomainError):
        Realization((1, 1, 2))


def test_valid_subsets_of_four():
    got = [str(s) for s in enumerate_valid(4)]
    assert got == ["", "1,2,3", "1,2,3;1,3,4", "1,2,3;2,3,4", "1,2,4", "1,2,4;2,3,4", "1,3,4", "2,3,4"]


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_and_extremes(n):
    assert count_valid(n) == 2 ** math.comb(n - 1, 2)
    hist = valid_size_histogram(n)
    assert max_valid_stats(n) == (len(hist) - 1, hist[-1])


def test_enumeration_matches_brute_force_filter():
    for n in range(1, 6):
        ts = all_triples(n)
        brute = set()
        for mask in range(1 << len(ts)):
            s = TripleSystem(n, tuple(t for b, t in enumerate(ts) if mask >> b & 1))
            if is_valid(s):
                brute.add(s)
        assert set(enumerate_valid(n)) == brute


def test_search_budget_guard():
    with pytest.raises(BudgetExceeded):
        next(enumerate_valid(10, budget=2**20))


def test_propp_round_trip():
    for n in range(3, 8):
        for t in all_triples(n):
            assert propp_inverse(propp_map(t), n) == t


triples_of = st.integers(3, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.sampled_from(all_triples(n)), max_size=6))
)


@settings(max_examples=200, deadline=None)
@given(triples_of)
def test_witnesses_realize_and_imply_validity(data):
    n, ts = data
    system = TripleSystem(n, tuple(ts))
    w = realize(system)
    if w is not None:
        assert w.realizes(system) and w.x[0] == 1
        assert is_valid(system)


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 8).flatmap(lambda n: st.tuples(st.sampled_from(all_triples(n)), st.sampled_from(all_triples(n)))))
def test_pair_criterion_matches_oracle(pair):
    a, b = pair
    assert is_consistent(a, b) == (realize(TripleSystem(a.n, (a, b))) is not None)


def test_pairwise_consistency_is_weaker_than_joint_realizability():
    # validity only constrains pairs; these two systems are valid but not realizable
    for text in ["1,2,3;1,3,5;2,3,4;2,4,5", "1,2,4;1,3,5;2,3,4;3,4,5"]:
        s = TripleSystem.parse(text, 5)
        assert is_valid(s) and realize(s) is None

import random
from itertools import combinations

import pytest
from conftest import signed_graphs
from hypothesis import given, strategies as st

from signedach.core import NEG, POS, InvalidParameter, SignedGraph
from signedach.formulas import cycle_graph
from signedach.oracles import equivalent_by_enumeration
from signedach.switching import (
    are_equivalent,
    canonical_form,
    equivalence_switch_set,
    signature_balance,
    switch,
)


def _subsets(draw, n):
    return [v for v in range(n) if draw(st.booleans())]


def test_trivial_switch_sets():
    G = SignedGraph(3, [(0, 1, NEG), (1, 2, POS)])
    assert switch(G, []) == G
    assert switch(G, range(3)) == G
    with pytest.raises(InvalidParameter):
        switch(G, [3])


def test_switching_two_vertices_of_k5(inferred_example):
    G, _ = inferred_example
    pos = {(0, 2), (0, 3), (1, 4), (2, 3)}
    expected = SignedGraph(5, [(u, v, POS if (u, v) in pos else NEG) for u, v in combinations(range(5), 2)])
    assert switch(G, {0, 4}) == expected


@given(st.data())
def test_switch_is_an_involution_and_respects_complements(data):
    G = data.draw(signed_graphs(max_n=7))
    S = _subsets(data.draw, G.order)
    assert switch(switch(G, S), S) == G
    assert switch(G, S) == switch(G, [v for v in range(G.order) if v not in S])


def test_canonical_forms():
    pos_path = SignedGraph(3, [(0, 1, POS), (1, 2, POS)])
    assert canonical_form(pos_path) == (pos_path, frozenset())
    H, S = canonical_form(SignedGraph(3, [(0, 1, POS), (1, 2, NEG)]))
    assert H == pos_path and S == {2}
    H, _ = canonical_form(cycle_graph([POS, NEG, POS]))
    assert H.negative_count() == 1
    # the single negative edge is the one outside the BFS tree from 0
    assert H.sign(1, 2) is NEG


def test_equivalence_examples():
    G = SignedGraph(3, [(0, 1, POS), (0, 2, NEG)])
    assert are_equivalent(G, G)
    assert not are_equivalent(cycle_graph([POS] * 3), cycle_graph([NEG, POS, POS]))
    with pytest.raises(InvalidParameter):
        are_equivalent(G, SignedGraph(3, [(0, 1, POS)]))


def test_tree_signatures_are_all_equivalent():
    rng = random.Random(7)
    for n in range(2, 7):
        for _ in range(5):
            tree = [(rng.randrange(v), v) for v in range(1, n)]
            a = SignedGraph(n, [(u, v, rng.choice((POS, NEG))) for u, v in tree])
            b = SignedGraph(n, [(u, v, rng.choice((POS, NEG))) for u, v in tree])
            assert are_equivalent(a, b) and equivalent_by_enumeration(a, b)


@given(st.data())
def test_equivalence_matches_enumeration(data):
    G = data.draw(signed_graphs(max_n=8))
    if data.draw(st.booleans()):
        H = switch(G, _subsets(data.draw, G.order))
    else:
        H = SignedGraph(G.order, [(u, v, data.draw(st.sampled_from((POS, NEG)))) for u, v, _ in G])
    assert are_equivalent(G, H) == equivalent_by_enumeration(G, H)
    S = equivalence_switch_set(G, H)
    assert (S is not None) == are_equivalent(G, H)
    if S is not None:
        assert switch(G, S) == H


def test_balance_examples(inferred_example):
    assert signature_balance(SignedGraph(3, [(0, 1, POS)])) == 0
    assert signature_balance(cycle_graph([NEG, POS, POS, POS])) == 1
    G, _ = inferred_example
    assert G.negative_count() == 6 and signature_balance(G) == 0


@given(st.integers(3, 10), st.data())
def test_cycle_balance_is_switching_invariant(n, data):
    C = cycle_graph([data.draw(st.sampled_from((POS, NEG))) for _ in range(n)])
    assert signature_balance(switch(C, _subsets(data.draw, n))) == signature_balance(C)

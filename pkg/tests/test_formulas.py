from itertools import product

import pytest
from hypothesis import given, strategies as st

from signedach.colouring import is_complete, is_inferred_complete
from signedach.core import NEG, POS, InvalidParameter, kstar_edge_types, kstar_size
from signedach.formulas import (
    CompleteVariant,
    UnsupportedParameter,
    construct_cycle_colouring,
    construct_path_colouring,
    construct_positive_clique_colouring,
    cycle_graph,
    euler_trail_kstar,
    path_graph,
    psi_complete,
    psi_cycle,
    psi_path,
)
from signedach.solver import psi
from signedach.switching import signature_balance


def test_psi_path_values():
    assert [psi_path(n) for n in (1, 5, 9)] == [1, 4, 5]
    with pytest.raises(InvalidParameter):
        psi_path(0)


@pytest.mark.parametrize("n", range(2, 8))
def test_psi_path_is_signature_independent(n):
    for signs in product((POS, NEG), repeat=n - 1):
        assert psi(path_graph(signs)).value == psi_path(n)


def test_psi_cycle_values():
    assert psi_cycle(3, 0) == 3 and psi_cycle(3, 1) == 2
    assert psi_cycle(4, 1) == 4 and psi_cycle(4, 0) == 2
    with pytest.raises(InvalidParameter):
        psi_cycle(2, 0)


@pytest.mark.parametrize("n", range(3, 8))
def test_psi_cycle_matches_solver_on_every_signature(n):
    for signs in product((POS, NEG), repeat=n):
        C = cycle_graph(signs)
        assert psi(C).value == psi_cycle(n, signature_balance(C))


def test_psi_complete_values():
    assert psi_complete(6, CompleteVariant("all_positive")) == 6
    assert psi_complete(5, CompleteVariant("all_negative")) == 2
    assert psi_complete(6, CompleteVariant("negative_minus_matching", 2)) == 3
    with pytest.raises(UnsupportedParameter):
        psi_complete(4, CompleteVariant("all_negative"))
    with pytest.raises(InvalidParameter):
        CompleteVariant("negative_minus_matching", 0)
    with pytest.raises(InvalidParameter):
        psi_complete(5, CompleteVariant("negative_minus_matching", 3))


@pytest.mark.parametrize("k", range(2, 13))
def test_euler_trail_is_closed_and_covers_kstar(k):
    trail = euler_trail_kstar(k)
    assert len(trail) == kstar_size(k)
    assert sorted(e for _, e in trail) == sorted(kstar_edge_types(k))
    assert trail[0][0] == min(v for v, _ in trail)
    for t, (v, e) in enumerate(trail):
        nxt = trail[(t + 1) % len(trail)][0]
        assert {v, nxt} == {e.i, e.j}


def test_euler_trail_small_cases():
    assert euler_trail_kstar(2) == [(1, (1, 1, NEG))]
    assert len(euler_trail_kstar(3)) == 3 and len(euler_trail_kstar(6)) == 9
    with pytest.raises(InvalidParameter):
        euler_trail_kstar(1)


def test_path_construction_examples():
    one = construct_path_colouring(1, [])
    assert one.k == 1 and one.assignment == ((0, POS),)
    assert construct_path_colouring(5, [NEG, POS, NEG, NEG]).k == 4
    alt = [POS if i % 2 else NEG for i in range(9)]
    gamma = construct_path_colouring(10, alt)
    # nine edges reach m_6 = 9, so the value is 6 (the solver agrees)
    assert gamma.k == 6 == psi(path_graph(alt)).value
    assert is_inferred_complete(path_graph(alt), gamma)


@given(st.integers(1, 30), st.randoms(use_true_random=False))
def test_path_construction_is_complete(n, rnd):
    signs = [rnd.choice((POS, NEG)) for _ in range(n - 1)]
    gamma = construct_path_colouring(n, signs)
    assert gamma.k == psi_path(n) and is_inferred_complete(path_graph(signs), gamma)


def test_cycle_construction_examples():
    for signs, k in [([POS] * 3, 3), ([NEG, POS, POS, POS], 4), ([POS] * 4, 2)]:
        gamma = construct_cycle_colouring(len(signs), signs)
        assert gamma.k == k and is_inferred_complete(cycle_graph(signs), gamma)


@given(st.integers(3, 30), st.randoms(use_true_random=False))
def test_cycle_construction_is_complete(n, rnd):
    signs = [rnd.choice((POS, NEG)) for _ in range(n)]
    C = cycle_graph(signs)
    gamma = construct_cycle_colouring(n, signs)
    assert gamma.k == psi_cycle(n, signature_balance(C)) and is_inferred_complete(C, gamma)


def test_positive_clique_colourings():
    assert construct_positive_clique_colouring(1).assignment == (0,)
    assert construct_positive_clique_colouring(4).assignment == (-2, -1, 1, 2)
    assert construct_positive_clique_colouring(5).assignment == (-2, -1, 0, 1, 2)
    for n in range(1, 13):
        G = CompleteVariant("all_positive").graph(n)
        assert is_complete(G, construct_positive_clique_colouring(n))


def test_cycle_graph_needs_three_vertices():
    with pytest.raises(InvalidParameter):
        cycle_graph([POS, POS])

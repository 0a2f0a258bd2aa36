import pickle

import pytest
from hypothesis import given, strategies as st

from signedach.core import (
    NEG,
    POS,
    EdgeType,
    Graph,
    InvalidParameter,
    Sign,
    SignedGraph,
    SignedMultigraph,
    build_kstar,
    colour_set,
    kstar_balance,
    kstar_edge_types,
    kstar_size,
    largest_k_within_size,
    magnitudes,
)


def test_sign_products():
    assert POS * POS is POS
    assert NEG * NEG is POS
    assert POS * NEG is NEG
    assert -NEG is POS
    # a sign times a colour is a colour, not a sign
    assert NEG * 2 == -2 and not isinstance(NEG * 2, Sign)
    assert Sign.parse("-") is NEG and Sign.parse("+") is POS


@given(st.sampled_from([POS, NEG]), st.sampled_from([POS, NEG]), st.sampled_from([POS, NEG]))
def test_sign_product_is_associative_and_commutative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


def test_edge_type_normalises_order():
    assert EdgeType.of(2, 1, NEG) == EdgeType(1, 2, NEG)


def test_signed_graph_validation():
    with pytest.raises(InvalidParameter):
        SignedGraph(2, [(0, 0, POS)])
    with pytest.raises(InvalidParameter):
        SignedGraph(2, [(0, 2, POS)])
    with pytest.raises(InvalidParameter):
        SignedGraph(2, [(0, 1, POS), (1, 0, NEG)])


def test_signed_graph_is_immutable_and_picklable():
    G = SignedGraph(3, [(0, 1, NEG), (1, 2, POS)])
    with pytest.raises(AttributeError):
        G.order = 4
    assert pickle.loads(pickle.dumps(G)) == G
    assert hash(G) == hash(SignedGraph(3, {(1, 2): POS, (0, 1): NEG}))


def test_graph_editing():
    G = SignedGraph(4, [(0, 1, NEG), (1, 2, POS), (2, 3, NEG)])
    assert G.flip_edge(1, 2).sign(1, 2) is NEG
    assert not G.without_edge(0, 1).has_edge(0, 1)
    H = G.without_vertex(1)
    assert H.order == 3 and H.sorted_edges() == [(1, 2, NEG)]
    assert G.induced([3, 2]).sorted_edges() == [(0, 1, NEG)]
    assert G.negative_count() == 2
    assert G.underlying() == Graph(4, [(0, 1), (1, 2), (2, 3)])


def test_kstar_small_cases():
    one = build_kstar(1)
    assert one.vertices == (0,) and one.size == 0
    two = build_kstar(2)
    assert two.vertices == (1,) and set(two.edges) == {EdgeType(1, 1, NEG)}
    four = build_kstar(4)
    assert four.vertices == (1, 2) and four.size == 4
    assert set(four.edges) == {
        EdgeType(1, 1, NEG), EdgeType(2, 2, NEG), EdgeType(1, 2, POS), EdgeType(1, 2, NEG)
    }


def test_kstar_size_values():
    assert [kstar_size(k) for k in (1, 5, 6)] == [0, 8, 9]
    with pytest.raises(InvalidParameter):
        kstar_size(0)


def test_kstar_balance_values():
    assert kstar_balance(1) == 0
    assert kstar_balance(3) == 0
    assert kstar_balance(4) == 1


def test_colour_sets():
    assert colour_set(4) == (-2, -1, 1, 2)
    assert colour_set(3) == (-1, 0, 1)
    assert colour_set(1) == (0,)
    with pytest.raises(InvalidParameter):
        colour_set(0)


@pytest.mark.parametrize("k", range(1, 65))
def test_kstar_invariants(k):
    K = build_kstar(k)
    assert len(colour_set(k)) == k
    assert K.size == kstar_size(k) == len(kstar_edge_types(k))
    assert K.order == ((k + 1) // 2 if k % 2 else k // 2)
    assert all(K.degree(a) % 2 == 0 for a in K.vertices)
    assert kstar_size(k + 1) - kstar_size(k) >= 1
    assert magnitudes(k) == list(K.vertices)


def test_largest_k_within_size():
    assert [largest_k_within_size(m) for m in range(10)] == [1, 2, 2, 3, 4, 4, 4, 4, 5, 6]


def test_multigraph_equality_ignores_multiplicity_only_after_simplifying():
    a = SignedMultigraph([1], [(1, 1, NEG), (1, 1, NEG)])
    b = SignedMultigraph([1], [(1, 1, NEG)])
    assert a != b
    assert a.simplified() == b

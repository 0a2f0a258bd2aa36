import pytest

from signedach.colouring import Colouring, is_complete, is_inferred_complete, is_proper
from signedach.core import NEG, POS, Graph, InvalidParameter, SignedGraph
from signedach.families import (
    FAMILIES,
    certify,
    gen_elementary_drop,
    gen_interpolation,
    gen_irreducible_large,
    gen_np_reduction,
    gen_perfect_counterexample,
    gen_remove_edge_lower,
    gen_remove_edge_upper,
    gen_remove_vertex,
    gen_resign_edge,
    gen_resign_edge_upper,
    is_complete_unsigned,
    np_forward_colouring,
    np_reduction_layout,
    np_reduction_size,
    shipped_witnesses_complete,
)
from signedach.homomorphism import identifiable, is_irreducible
from signedach.solver import complete_unsigned_colouring, exists_complete_k, psi, psi_unsigned
from signedach.subgraphs import clique_number

K2 = Graph(2, [(0, 1)])
P3 = Graph(3, [(0, 1), (1, 2)])
K3 = Graph(3, [(0, 1), (0, 2), (1, 2)])


def _instances(kmax=10):
    for name, gen in FAMILIES.items():
        if name == "perfect":
            yield gen()
        elif name == "irreducible":
            for p in (1, 2, 3):
                for m in range(2 * p, 2 * p + 4):
                    yield gen(p, m)
        elif name == "interpolation":
            for k in (3, 5, 7, 9):
                yield gen(k)
        else:
            for k in range(3, kmax + 1):
                try:
                    yield gen(k)
                except InvalidParameter:
                    pass


def test_parameter_ranges():
    for gen, low in [(gen_remove_vertex, 3), (gen_resign_edge, 4), (gen_resign_edge_upper, 4),
                     (gen_remove_edge_lower, 5), (gen_remove_edge_upper, 6), (gen_elementary_drop, 8)]:
        with pytest.raises(InvalidParameter):
            gen(low - 1)
        gen(low)
    with pytest.raises(InvalidParameter):
        gen_interpolation(4)
    with pytest.raises(InvalidParameter):
        gen_interpolation(1)
    with pytest.raises(InvalidParameter):
        gen_irreducible_large(2, 3)


def test_every_shipped_witness_is_complete():
    for inst in _instances():
        assert shipped_witnesses_complete(inst), (inst.name, inst.params)


def test_bound_chains_hold_without_the_solver():
    for inst in _instances():
        cert = certify(inst)
        assert not cert.failed_steps, (inst.name, inst.params, cert.failed_steps)
        if not cert.argument_steps:
            assert all(cert.holds(inst).values()), (inst.name, inst.params)


def test_remove_vertex_shapes():
    six = gen_remove_vertex(6)
    assert six.graph.order == 6 and six.graph.size == 9
    assert six.labels == ("u1", "u2", "u3", "v1", "v2", "v3")
    assert six.graph.sign(0, 3) is NEG and six.graph.sign(1, 3) is POS
    seven = gen_remove_vertex(7)
    assert seven.graph.order == 8 and seven.marked == (0,)
    four = gen_remove_vertex(4)
    assert psi(four.graph).value == 4 and psi(four.after_graph()).value == 2


def test_resign_edge_shapes():
    six = gen_resign_edge(6)
    G = six.graph
    assert G.order == 6 and G.size == 15
    positives = [(u, v) for u, v, s in G.sorted_edges() if s is POS]
    assert len(positives) == 2 and len({x for e in positives for x in e}) == 4
    assert gen_resign_edge(5).graph.order == 6
    four = gen_resign_edge(4)
    assert psi(four.graph).value == 4 and psi(four.after_graph()).value == 2
    up = gen_resign_edge_upper(4)
    assert psi(up.graph).value == 2 and psi(up.after_graph()).value == 4


def test_remove_edge_shapes():
    six = gen_remove_edge_lower(6)
    G = six.graph
    assert G.order == 6 and G.size == 9
    assert sum(1 for *_, s in G.sorted_edges() if s is NEG) == 6
    assert psi(G).value == 6 and psi(six.after_graph()).value == 4
    upper = gen_remove_edge_upper(6)
    assert upper.graph.order == 8
    assert upper.marked == (upper.vertex("k1"), upper.vertex("v1"))
    assert psi(upper.after_graph()).value == 6
    odd = gen_remove_edge_upper(7)
    assert odd.graph.order == 10 and odd.graph.negative_count() == odd.graph.size == 3 * 7 - 1


def test_elementary_drop_shapes():
    eight = gen_elementary_drop(8)
    v, w = eight.marked
    assert not eight.graph.has_edge(v, w) and identifiable(eight.graph, v, w)
    assert is_inferred_complete(eight.graph, eight.witness)
    assert gen_elementary_drop(10).graph.order == 12
    nine = gen_elementary_drop(9)
    a, b = nine.vertex("a"), nine.vertex("b")
    assert not nine.graph.has_edge(a, b)
    assert all(nine.graph.degree(x) == nine.graph.order - 2 for x in (a, b))
    assert nine.extras["certified_drop"] == 2


def test_interpolation_instances():
    three = gen_interpolation(3)
    assert three.graph.order == 6
    assert exists_complete_k(three.graph, 3) is None
    assert is_proper(three.graph, three.extras["proper_colouring"])
    assert three.extras["proper_colouring"].k <= 4
    five = gen_interpolation(5)
    assert five.graph.order == 10 and is_inferred_complete(five.graph, five.witness)


def test_perfect_counterexample():
    inst = gen_perfect_counterexample()
    assert inst.graph.order == 6 and inst.graph.size == 10
    assert is_proper(inst.graph, inst.extras["proper_colouring"])
    assert is_complete(inst.graph, inst.extras["complete_colouring"])
    assert clique_number(inst.graph) == inst.extras["omega"] == 3


def test_irreducible_family():
    assert psi(gen_irreducible_large(1, 4).graph).value == 4
    assert psi(gen_irreducible_large(2, 6).graph).value == 6
    for p in (1, 2, 3):
        for m in range(2 * p, 2 * p + 4):
            assert is_irreducible(gen_irreducible_large(p, m).graph)
    assert gen_irreducible_large(2, 5).claimed_psi is None


def test_np_reduction_orders_and_sizes():
    assert gen_np_reduction(P3, 2).order == 55
    assert gen_np_reduction(Graph(1), 1).order == 10
    assert gen_np_reduction(P3, 2).size == np_reduction_size(3, 2, 2) == 734
    assert gen_np_reduction(Graph(1), 1).size == 25
    lay = np_reduction_layout(3, 2)
    assert [len(lay[p]) for p in ("copy", "clique", "minus", "plus")] == [3, 2, 25, 25]


def test_np_reduction_structure():
    G = gen_np_reduction(P3, 2)
    lay = np_reduction_layout(3, 2)
    c0, m0, p0 = lay["clique"][0], lay["minus"][0], lay["plus"][0]
    assert G.sign(0, 1) is POS and not G.has_edge(0, 2)
    assert G.sign(0, c0) is NEG and G.sign(m0, c0) is NEG and G.sign(p0, c0) is POS
    assert G.sign(m0, p0) is NEG and not G.has_edge(m0, lay["plus"][1])
    assert G.sign(m0, lay["minus"][1]) is NEG and G.sign(p0, lay["plus"][1]) is POS
    assert not G.has_edge(0, m0) and not G.has_edge(0, p0)


@pytest.mark.parametrize("base,k,target", [(K2, 2, 36), (P3, 2, 54), (K3, 3, 78), (K2, 1, 20), (K3, 2, 54)])
def test_np_forward_colouring(base, k, target):
    # start from a complete colouring with psi(base) >= k colours
    colours = [c + 1 for c in complete_unsigned_colouring(base, psi_unsigned(base))]
    assert is_complete_unsigned(base, colours)
    phi = np_forward_colouring(base, k, colours)
    assert phi.k == target
    assert is_complete(gen_np_reduction(base, k), phi)


def test_np_forward_colouring_rejects_incomplete_input():
    with pytest.raises(InvalidParameter):
        np_forward_colouring(P3, 2, [1, 1, 2])


def test_np_reduction_smallest_case_solved_exactly():
    G = gen_np_reduction(Graph(1), 1)
    assert psi(G).value == 10

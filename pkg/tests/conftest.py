from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from signedach import NEG, POS, SignedGraph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def signed_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    edges = []
    for u, v in combinations(range(n), 2):
        if draw(st.booleans()):
            edges.append((u, v, draw(st.sampled_from((POS, NEG)))))
    return SignedGraph(n, edges)


@pytest.fixture
def reduction_example():
    """Five vertices, a proper 4-colouring whose reduction is K*_4."""
    G = SignedGraph(5, [(0, 1, NEG), (1, 4, NEG), (3, 4, POS), (0, 2, POS), (1, 2, POS), (2, 3, POS), (2, 4, POS)])
    return G, (1, 2, -1, -2, 2)


@pytest.fixture
def preservation_example():
    """A complete 3-colouring that survives switching vertex 0 but not then vertex 3."""
    G = SignedGraph(4, [(0, 1, NEG), (1, 2, NEG), (1, 3, POS)])
    return G, (1, 1, 0, 0)


@pytest.fixture
def inferred_example():
    """K_5 with six negative edges and an inferred complete 5-colouring."""
    pos = {(0, 1), (2, 3), (2, 4), (3, 4)}
    G = SignedGraph(5, [(u, v, POS if (u, v) in pos else NEG) for u, v in combinations(range(5), 2)])
    gamma = ((0, NEG), (1, POS), (1, POS), (2, POS), (2, NEG))
    return G, gamma

"""Brute-force reference implementations, used to cross-check the fast code paths.

Everything here enumerates exhaustively and is meant for graphs of at most a
handful of vertices.
"""

from __future__ import annotations

from itertools import combinations, product

from .colouring import Colouring, InferredColouring, is_complete, is_inferred_complete, is_proper, realize
from .core import NEG, POS, Graph, SignedGraph, colour_set, magnitudes
from .switching import switch


def all_switch_sets(n: int):
    for r in range(n + 1):
        yield from combinations(range(n), r)


def equivalent_by_enumeration(G1: SignedGraph, G2: SignedGraph) -> bool:
    return any(switch(G1, S) == G2 for S in all_switch_sets(G1.order))


def max_matching_by_enumeration(G: SignedGraph | Graph) -> int:
    edges = sorted(G.edges.keys() if isinstance(G, SignedGraph) else G.edges)
    best = 0
    for r in range(1, G.order // 2 + 1):
        found = False
        for chosen in combinations(edges, r):
            ends = [x for e in chosen for x in e]
            if len(set(ends)) == 2 * r:
                found = True
                break
        if not found:
            break
        best = r
    return best


def all_inferred_colourings(n: int, k: int):
    choices = [(m, f) for m in magnitudes(k) for f in (POS, NEG)]
    for assignment in product(choices, repeat=n):
        yield InferredColouring(k, assignment)


def complete_by_enumeration(G: SignedGraph, k: int) -> bool:
    """Whether an inferred-complete k-colouring exists, checked via realize + is_complete."""
    for gamma in all_inferred_colourings(G.order, k):
        H, phi = realize(G, gamma)
        if is_complete(H, phi):
            return True
    return False


def complete_by_switching(G: SignedGraph, k: int) -> bool:
    """Same question, straight from the definition: some switching plus some colouring."""
    colours = colour_set(k)
    for S in all_switch_sets(G.order):
        H = switch(G, S)
        for assignment in product(colours, repeat=G.order):
            if is_complete(H, Colouring(k, assignment)):
                return True
    return False


def psi_by_enumeration(G: SignedGraph) -> int:
    for k in range(max(G.order, 1), 0, -1):
        if any(is_inferred_complete(G, g) for g in all_inferred_colourings(G.order, k)):
            return k
    return 1


def chi_by_enumeration(G: SignedGraph) -> int:
    for k in range(1, G.order + 1):
        if any(is_proper(G, Colouring(k, a)) for a in product(colour_set(k), repeat=G.order)):
            return k
    return 1


def psi_unsigned_by_enumeration(G: Graph) -> int:
    edges = sorted(G.edges)
    for k in range(max(G.order, 1), 0, -1):
        for col in product(range(k), repeat=G.order):
            if len(set(col)) != k:
                continue
            if any(col[u] == col[v] for u, v in edges):
                continue
            pairs = {frozenset((col[u], col[v])) for u, v in edges}
            if len(pairs) == k * (k - 1) // 2:
                return k
    return 1
